// Copyright 2026 The mubgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "mubgame/game.hpp"
#include "mubgame/mub.hpp"
#include "mubgame/optimize.hpp"
#include "mubgame/search.hpp"

namespace mubgame {

// Matrices are encoded as flat row-major lists of [re, im] pairs. Doubles are
// written with 17 significant digits, so decoding reproduces every bit.

/// {dim, family, excluded, relabellings, unitaries}
std::string to_json(const MubSet& set, int indent = -1);
MubSet mub_set_from_json(std::string_view text);

/// {probe, povm}
std::string to_json(const Strategy& strategy, int indent = -1);
Strategy strategy_from_json(std::string_view text);

/// Includes every restart's value trace.
std::string to_json(const SeesawResult& result, int indent = -1);

std::string to_json(const ScanReport& report, int indent = -1);
/// One row per configuration: excluded,relabellings,value,seed,restarts
std::string scan_report_to_csv(const ScanReport& report);

/// %.17g
std::string format_double(double v);

}  // namespace mubgame
