// Copyright 2026 The cpbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "cpb/errors.hpp"
#include "cpb/sweep.hpp"

namespace cpb {

// Self-contained static SVG output. All numbers are formatted through
// to_chars with fixed precision, so identical inputs produce byte-identical
// files on every run and platform locale.

namespace svg_detail {

inline std::string fmt(double v, int precision = 6) {
  if (!std::isfinite(v)) return "0";
  std::array<char, 40> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, precision);
  return std::string(buf.data(), res.ptr);
}

inline std::string px(double v) {
  std::array<char, 40> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

inline std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

inline Range padded_range(double lo, double hi, double pad_frac) {
  if (!(hi > lo)) {
    const double pad = std::max(0.5, std::fabs(lo) * 0.1);
    return {lo - pad, lo + pad};
  }
  const double pad = (hi - lo) * pad_frac;
  return {lo - pad, hi + pad};
}

inline std::vector<double> nice_ticks(const Range& r) {
  const double raw = (r.hi - r.lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  const double step = mag * (norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0);
  std::vector<double> ticks;
  double t = std::ceil(r.lo / step) * step;
  while (t <= r.hi + 1e-9 * step) {
    if (std::fabs(t) < 1e-12 * step) t = 0.0;
    ticks.push_back(t);
    t += step;
  }
  return ticks;
}

inline const std::array<const char*, 8>& palette() {
  static const std::array<const char*, 8> colors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  return colors;
}

// Five-stop dark-violet to yellow color ramp for heatmaps.
inline std::string ramp_color(double u) {
  static const double stops[5][3] = {
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
  u = std::clamp(u, 0.0, 1.0);
  const double pos = u * 4.0;
  const int k = std::min(3, static_cast<int>(pos));
  const double f = pos - k;
  std::array<char, 8> buf{"#000000"};
  for (int c = 0; c < 3; ++c) {
    const int v = static_cast<int>(std::lround(stops[k][c] + f * (stops[k + 1][c] - stops[k][c])));
    static const char* hex = "0123456789abcdef";
    buf[1 + 2 * c] = hex[(v >> 4) & 0xf];
    buf[2 + 2 * c] = hex[v & 0xf];
  }
  return std::string(buf.data(), 7);
}

constexpr double kWidth = 880.0;
constexpr double kHeight = 560.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 58.0;
constexpr double kLeft = 76.0;

inline void open_document(std::string& out) {
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) + "\" height=\"" +
         px(kHeight) + "\" viewBox=\"0 0 " + px(kWidth) + " " + px(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

inline void draw_frame(std::string& out, double right_margin, const std::string& title,
                       const std::string& x_label, const std::string& y_label, const Range& xr,
                       const Range& yr) {
  const double x0 = kLeft;
  const double x1 = kWidth - right_margin;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  auto sx = [&](double x) { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
  auto sy = [&](double y) { return y0 - (y - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

  out += "<text x=\"" + px((x0 + x1) / 2) + "\" y=\"26\" text-anchor=\"middle\" " +
         "font-family=\"sans-serif\" font-size=\"16\">" + escape(title) + "</text>\n";

  for (double t : nice_ticks(xr)) {
    const double x = sx(t);
    out += "<line x1=\"" + px(x) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(x) + "\" y2=\"" + px(y1) +
           "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + px(x) + "\" y1=\"" + px(y0) + "\" x2=\"" + px(x) + "\" y2=\"" +
           px(y0 + 5) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + px(x) + "\" y=\"" + px(y0 + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + fmt(t) +
           "</text>\n";
  }
  for (double t : nice_ticks(yr)) {
    const double y = sy(t);
    out += "<line x1=\"" + px(x0) + "\" y1=\"" + px(y) + "\" x2=\"" + px(x1) + "\" y2=\"" + px(y) +
           "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + px(x0 - 5) + "\" y1=\"" + px(y) + "\" x2=\"" + px(x0) + "\" y2=\"" +
           px(y) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + px(x0 - 8) + "\" y=\"" + px(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" + fmt(t) +
           "</text>\n";
  }
  out += "<rect x=\"" + px(x0) + "\" y=\"" + px(y1) + "\" width=\"" + px(x1 - x0) +
         "\" height=\"" + px(y0 - y1) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + px((x0 + x1) / 2) + "\" y=\"" + px(kHeight - 14) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         escape(x_label) + "</text>\n";
  out += "<text x=\"20\" y=\"" + px((y0 + y1) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 20 " +
         px((y0 + y1) / 2) + ")\">" + escape(y_label) + "</text>\n";
}

}  // namespace svg_detail

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Multi-series polyline chart with axes, gridlines and a legend.
struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;

  std::string render() const {
    using namespace svg_detail;
    if (series.empty()) throw std::invalid_argument("LineChart: no series to draw");
    double xlo = series[0].x.front(), xhi = series[0].x.front();
    double ylo = series[0].y.front(), yhi = series[0].y.front();
    for (const Series& s : series) {
      if (s.x.size() != s.y.size() || s.x.empty())
        throw std::invalid_argument("LineChart: series sizes are inconsistent");
      for (double v : s.x) {
        xlo = std::min(xlo, v);
        xhi = std::max(xhi, v);
      }
      for (double v : s.y) {
        ylo = std::min(ylo, v);
        yhi = std::max(yhi, v);
      }
    }
    const Range xr = padded_range(xlo, xhi, 0.0);
    const Range yr = padded_range(ylo, yhi, 0.05);
    const double right = 28.0;
    const double x0 = kLeft, x1 = kWidth - right, y0 = kHeight - kBottom, y1 = kTop;
    auto sx = [&](double x) { return x0 + (x - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
    auto sy = [&](double y) { return y0 - (y - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

    std::string out;
    open_document(out);
    draw_frame(out, right, title, x_label, y_label, xr, yr);
    for (std::size_t k = 0; k < series.size(); ++k) {
      const char* color = palette()[k % palette().size()];
      out += "<polyline fill=\"none\" stroke=\"";
      out += color;
      out += "\" stroke-width=\"1.6\" points=\"";
      for (std::size_t i = 0; i < series[k].x.size(); ++i) {
        if (i) out += ' ';
        out += px(sx(series[k].x[i]));
        out += ',';
        out += px(sy(series[k].y[i]));
      }
      out += "\"/>\n";
    }
    // legend, top-right corner of the plot area
    const double lx = x1 - 170.0;
    double ly = y1 + 16.0;
    for (std::size_t k = 0; k < series.size(); ++k) {
      const char* color = palette()[k % palette().size()];
      out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly - 4) + "\" x2=\"" + px(lx + 26) +
             "\" y2=\"" + px(ly - 4) + "\" stroke=\"";
      out += color;
      out += "\" stroke-width=\"2\"/>\n";
      out += "<text x=\"" + px(lx + 32) + "\" y=\"" + px(ly) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(series[k].label) +
             "</text>\n";
      ly += 17.0;
    }
    out += "</svg>\n";
    return out;
  }
};

/// Dense cell grid colored by value, with a labeled colorbar.
struct HeatmapChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::string value_label;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::vector<double>> values;  // [iy][ix]

  std::string render() const {
    using namespace svg_detail;
    if (x.size() < 2 || y.empty()) throw std::invalid_argument("HeatmapChart: grid too small");
    if (values.size() != y.size())
      throw std::invalid_argument("HeatmapChart: value rows do not match the y grid");
    double vlo = values[0][0], vhi = values[0][0];
    for (const auto& row : values) {
      if (row.size() != x.size())
        throw std::invalid_argument("HeatmapChart: value columns do not match the x grid");
      for (double v : row) {
        vlo = std::min(vlo, v);
        vhi = std::max(vhi, v);
      }
    }
    if (!(vhi > vlo)) vhi = vlo + 1.0;

    auto edges = [](const std::vector<double>& g) {
      std::vector<double> e(g.size() + 1);
      e[0] = g.front() - (g.size() > 1 ? 0.5 * (g[1] - g[0]) : 0.5);
      for (std::size_t i = 1; i < g.size(); ++i) e[i] = 0.5 * (g[i - 1] + g[i]);
      e[g.size()] = g.back() + (g.size() > 1 ? 0.5 * (g[g.size() - 1] - g[g.size() - 2]) : 0.5);
      return e;
    };
    const std::vector<double> xe = edges(x);
    const std::vector<double> ye = edges(y);
    const Range xr{xe.front(), xe.back()};
    const Range yr{ye.front(), ye.back()};

    const double right = 124.0;
    const double x0 = kLeft, x1 = kWidth - right, y0 = kHeight - kBottom, y1 = kTop;
    auto sx = [&](double v) { return x0 + (v - xr.lo) / (xr.hi - xr.lo) * (x1 - x0); };
    auto sy = [&](double v) { return y0 - (v - yr.lo) / (yr.hi - yr.lo) * (y0 - y1); };

    std::string out;
    open_document(out);
    for (std::size_t iy = 0; iy < y.size(); ++iy) {
      for (std::size_t ix = 0; ix < x.size(); ++ix) {
        const double u = (values[iy][ix] - vlo) / (vhi - vlo);
        const double rx = sx(xe[ix]);
        const double ry = sy(ye[iy + 1]);
        out += "<rect x=\"" + px(rx) + "\" y=\"" + px(ry) + "\" width=\"" +
               px(sx(xe[ix + 1]) - rx) + "\" height=\"" + px(sy(ye[iy]) - ry) + "\" fill=\"" +
               ramp_color(u) + "\"/>\n";
      }
    }
    draw_frame(out, right, title, x_label, y_label, xr, yr);

    // colorbar
    const double bx = x1 + 26.0;
    const double bw = 18.0;
    const int cells = 64;
    for (int i = 0; i < cells; ++i) {
      const double u0 = static_cast<double>(i) / cells;
      const double cy1 = y0 - (y0 - y1) * static_cast<double>(i + 1) / cells;
      out += "<rect x=\"" + px(bx) + "\" y=\"" + px(cy1) + "\" width=\"" + px(bw) + "\" height=\"" +
             px((y0 - y1) / cells + 0.5) + "\" fill=\"" + ramp_color(u0) + "\"/>\n";
    }
    out += "<rect x=\"" + px(bx) + "\" y=\"" + px(y1) + "\" width=\"" + px(bw) + "\" height=\"" +
           px(y0 - y1) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    const double labels[3] = {vlo, 0.5 * (vlo + vhi), vhi};
    for (int i = 0; i < 3; ++i) {
      const double ly = y0 - (y0 - y1) * 0.5 * i;
      out += "<text x=\"" + px(bx + bw + 6) + "\" y=\"" + px(ly + 4) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(labels[i]) + "</text>\n";
    }
    out += "<text x=\"" + px(bx + bw / 2) + "\" y=\"" + px(y1 - 8) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           escape(value_label) + "</text>\n";
    out += "</svg>\n";
    return out;
  }
};

namespace svg_detail {

struct VariedAxis {
  std::string name;
  std::vector<double> values;
};

inline std::vector<VariedAxis> varied_axes(const SweepConfig& cfg) {
  std::vector<VariedAxis> out;
  if (cfg.e_m.size() > 1) out.push_back({"e_m", cfg.e_m});
  if (cfg.gamma.size() > 1) out.push_back({"gamma", cfg.gamma});
  if (cfg.xi.size() > 1) out.push_back({"xi", cfg.xi});
  if (cfg.e_j1.size() > 1) out.push_back({"e_j1", cfg.e_j1});
  if (cfg.e_j2.size() > 1) out.push_back({"e_j2", cfg.e_j2});
  return out;
}

}  // namespace svg_detail

/// Render a sweep as a static figure of the mutual entropy.
///   lines:   I(t) with one polyline per value of the single varied
///            parameter axis (or a single line when nothing else varies).
///   heatmap: time on x, the single varied parameter axis on y, I as color.
inline std::string render_svg_text(const SweepResult& res, PlotKind kind) {
  const auto axes = svg_detail::varied_axes(res.config);
  const int nt = res.config.t_grid.n_points;
  const std::size_t combos = res.config.combo_count();
  const std::string title =
      res.config.title.empty() ? std::string("quantum mutual entropy") : res.config.title;

  if (kind == PlotKind::lines) {
    if (axes.size() > 1)
      throw std::invalid_argument(
          "render_svg: lines needs at most one varied parameter axis besides time, got " +
          std::to_string(axes.size()));
    LineChart chart;
    chart.title = title;
    chart.x_label = "scaled time t";
    chart.y_label = "mutual entropy I (bits)";
    for (std::size_t k = 0; k < combos; ++k) {
      Series s;
      s.label = axes.empty() ? std::string("I")
                             : axes[0].name + " = " + svg_detail::fmt(axes[0].values[k]);
      s.x.reserve(nt);
      s.y.reserve(nt);
      for (int i = 0; i < nt; ++i) {
        const SweepRow& r = res.rows[k * nt + i];
        s.x.push_back(r.t);
        s.y.push_back(r.mutual);
      }
      chart.series.push_back(std::move(s));
    }
    return chart.render();
  }

  if (axes.size() != 1)
    throw std::invalid_argument(
        "render_svg: heatmap needs exactly one varied parameter axis besides time, got " +
        std::to_string(axes.size()));
  HeatmapChart chart;
  chart.title = title;
  chart.x_label = "scaled time t";
  chart.y_label = axes[0].name;
  chart.value_label = "I (bits)";
  chart.y = axes[0].values;
  chart.x.reserve(nt);
  for (int i = 0; i < nt; ++i) chart.x.push_back(res.rows[i].t);
  chart.values.resize(combos);
  for (std::size_t k = 0; k < combos; ++k) {
    chart.values[k].reserve(nt);
    for (int i = 0; i < nt; ++i) chart.values[k].push_back(res.rows[k * nt + i].mutual);
  }
  return chart.render();
}

inline void render_svg(const SweepResult& res, PlotKind kind, const std::string& path) {
  const std::string text = render_svg_text(res, kind);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace cpb
