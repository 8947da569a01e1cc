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

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "cpb/errors.hpp"
#include "cpb/sweep.hpp"

namespace cpb {

inline constexpr std::string_view kCsvHeader =
    "t,e_m,gamma,xi,e_j1,e_j2,S_A,S_B,S_AB,I,purity,energy,p_gg,p_ge,p_eg,p_ee";

/// 17 significant digits in the shortest general form: enough to reproduce
/// any double bit-exactly on read-back, locale independent.
inline std::string format_double17(double v) {
  std::array<char, 40> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

inline std::array<double, 16> row_values(const SweepRow& r) {
  return {r.t,   r.e_m,    r.gamma,  r.xi,   r.e_j1, r.e_j2, r.s_a,  r.s_b,
          r.s_ab, r.mutual, r.purity, r.energy, r.p_gg, r.p_ge, r.p_eg, r.p_ee};
}

inline std::string to_csv_text(const SweepResult& res) {
  std::string out;
  out.reserve(res.rows.size() * 200 + 64);
  out += kCsvHeader;
  out += '\n';
  for (const SweepRow& r : res.rows) {
    const auto vals = row_values(r);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i) out += ',';
      out += format_double17(vals[i]);
    }
    out += '\n';
  }
  return out;
}

inline void write_csv(const SweepResult& res, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  const std::string text = to_csv_text(res);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed: " + path);
}

struct CsvTable {
  std::string header;
  std::vector<std::array<double, 16>> rows;
};

inline CsvTable parse_csv_text(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("csv: empty input");
  table.header = line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<double, 16> row{};
    std::size_t start = 0;
    for (int col = 0; col < 16; ++col) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) comma = line.size();
      if (col == 15 && comma != line.size())
        throw IoError("csv line " + std::to_string(line_no) + ": too many columns");
      const char* first = line.data() + start;
      const char* last = line.data() + comma;
      const auto res = std::from_chars(first, last, row[col]);
      if (res.ec != std::errc{} || res.ptr != last)
        throw IoError("csv line " + std::to_string(line_no) + ": bad number in column " +
                      std::to_string(col + 1));
      if (comma == line.size() && col < 15)
        throw IoError("csv line " + std::to_string(line_no) + ": too few columns");
      start = comma + 1;
    }
    table.rows.push_back(row);
  }
  return table;
}

inline CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv_text(buf.str());
}

}  // namespace cpb
