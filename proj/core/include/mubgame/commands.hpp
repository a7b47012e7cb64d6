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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mubgame/numtheory.hpp"
#include "mubgame/optimize.hpp"
#include "mubgame/search.hpp"

namespace mubgame {

/// Quantum upper/lower and classical lower/upper bounds on the guessing probability.
enum class BoundKind { qub, qlb, clb, cub };

std::string_view to_string(BoundKind kind);
BoundKind bound_kind_from_string(std::string_view name);

struct BoundRow {
  std::int64_t dim = 0;
  BoundKind bound = BoundKind::qub;
  double value = 0.0;
  std::string method;  // closed-form | exhaustive | seesaw | scan:<mode>
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> configs;

  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct BoundsConfig {
  SeesawConfig seesaw;
  ScanOptions scan;
  /// Relabelling scan mode for QLB; nullopt picks auto_scan_mode per dimension.
  std::optional<ScanMode> mode;
};

/// Most thorough mode whose see-saw count fits the budget: exhaustive, then
/// cyclic, then random with as many samples as fit (at most 10^4 per subset).
ScanMode auto_scan_mode(PrimeDim d, const ScanOptions& options);

/// QUB, CUB, CLB and QLB rows for every dimension. CLB is the exact classical
/// optimum of the WF subset when d^d maps fit the budget, otherwise a
/// classical-coin see-saw lower bound. Throws ContractViolation for a
/// non-prime dimension before doing any work.
std::vector<BoundRow> cmd_bounds(std::span<const std::int64_t> dims, const BoundsConfig& config);

/// Header `dim,bound,value,method,seed,configs`; floats with 17 significant digits.
std::string bounds_to_csv(std::span<const BoundRow> rows);
std::vector<BoundRow> bounds_from_csv(std::string_view text);
std::string bounds_to_json(std::span<const BoundRow> rows, int indent = -1);
std::vector<BoundRow> bounds_from_json(std::string_view text);

struct CertifyReport {
  std::int64_t dim = 0;
  bool mub_ok = false;
  double mub_worst_deviation = 0.0;
  bool povm_projective = false;
  double max_phi_overlap = 0.0;  // max_{i != j} |<phi_i|phi_j>|
  double guessing_probability = 0.0;
  double pg_deviation = 0.0;     // |P_g - 1|
  std::vector<std::size_t> completed_outcomes;
  bool ok = false;
};

/// Builds the relabelled WF set and the closed-form strategy and checks them at 1e-9.
/// Throws ContractViolation for d = 2 or non-prime d.
CertifyReport cmd_certify(std::int64_t dim);
std::string to_json(const CertifyReport& report, int indent = -1);

}  // namespace mubgame
