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

// Umbrella header for the coupled Cooper-pair-box simulator.

#include "cpb/charge.hpp"
#include "cpb/config.hpp"
#include "cpb/csv.hpp"
#include "cpb/density.hpp"
#include "cpb/dynamics.hpp"
#include "cpb/eigen.hpp"
#include "cpb/entropy.hpp"
#include "cpb/errors.hpp"
#include "cpb/matrix.hpp"
#include "cpb/svg.hpp"
#include "cpb/sweep.hpp"
#include "cpb/validate.hpp"
