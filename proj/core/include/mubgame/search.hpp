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
#include <string>
#include <string_view>
#include <vector>

#include "mubgame/game.hpp"
#include "mubgame/mub.hpp"
#include "mubgame/optimize.hpp"

namespace mubgame {

struct ScanMode {
  enum class Kind { exhaustive, cyclic, random };

  Kind kind = Kind::exhaustive;
  std::uint64_t samples = 0;  // random mode only

  static ScanMode exhaustive() { return {Kind::exhaustive, 0}; }
  static ScanMode cyclic() { return {Kind::cyclic, 0}; }
  static ScanMode random(std::uint64_t n);

  /// "exhaustive", "cyclic" or "random(N)".
  std::string to_string() const;
  /// Accepts the to_string() forms plus "random:N".
  static ScanMode parse(std::string_view text);

  friend bool operator==(const ScanMode&, const ScanMode&) = default;
};

/// Limits on enumeration sizes. Defaults admit classical map searches up to
/// d = 7 and exhaustive relabelling spaces up to d = 5.
struct SearchBudget {
  std::uint64_t max_classical_maps = 823543;               // 7^7
  std::uint64_t max_relabelling_tuples = 24883200000ULL;   // (5!)^5
  std::uint64_t max_materialized_tuples = 1000000;         // enumerate_relabellings
  std::uint64_t max_quantum_configs = 2000;                // see-saw runs in a scan
};

struct ClassicalOptimum {
  double value = 0.0;
  OutcomeMap best_map;
  std::uint64_t maps_evaluated = 0;
};

/// Exact classical-coin optimum: max over all d^d outcome maps. Ties go to the
/// lexicographically smallest map. Throws BudgetExceeded above the map budget.
ClassicalOptimum classical_exhaustive(const MubSet& set, const SearchBudget& budget = {}, std::size_t threads = 0);

/// Indexable view of the relabelling tuples a scan mode visits. Exhaustive and
/// cyclic spaces decode the index in mixed radix (basis 0 most significant);
/// random tuple k is drawn from a generator seeded with split_seed(seed, k).
class RelabellingSpace {
 public:
  RelabellingSpace(PrimeDim d, ScanMode mode, std::uint64_t seed, const SearchBudget& budget = {});

  std::uint64_t size() const { return size_; }
  std::vector<Permutation> at(std::uint64_t index) const;
  /// Position of a tuple in an exhaustive or cyclic space; nullopt if absent or random.
  std::optional<std::uint64_t> index_of(const std::vector<Permutation>& tuple) const;
  PrimeDim dim() const { return dim_; }
  const ScanMode& mode() const { return mode_; }

 private:
  PrimeDim dim_;
  ScanMode mode_;
  std::uint64_t seed_;
  std::uint64_t size_ = 0;
};

std::vector<std::vector<Permutation>> enumerate_relabellings(PrimeDim d, ScanMode mode, std::uint64_t seed,
                                                             const SearchBudget& budget = {});

struct ScanEntry {
  std::size_t excluded = 0;
  std::vector<std::uint64_t> relabelling_ids;  // Permutation::rank() per basis
  double value = 0.0;
  std::uint64_t seed = 0;
  std::size_t restarts = 0;  // 0 for classical exact values
};

struct ScanReport {
  std::int64_t dim = 0;
  CoinKind coin = CoinKind::quantum;
  ScanMode mode;
  std::uint64_t seed = 0;
  std::vector<ScanEntry> per_config;
  double min_value = 0.0;
  double max_value = 0.0;
  std::size_t min_config = 0;  // index into per_config
  std::size_t max_config = 0;
  std::uint64_t total_configs_evaluated = 0;
};

struct ScanOptions {
  SearchBudget budget;
  /// See-saw restarts for the first pass over every configuration.
  std::size_t screening_restarts = 10;
  /// Lowest and highest configurations re-run with SeesawConfig::restarts.
  std::size_t confirm_count = 5;
  /// Random scans also evaluate the identity tuple of every subset.
  bool identity_anchor = true;
  std::size_t threads = 0;
};

/// Quantum coin: one see-saw per (excluded basis, relabelling tuple). Classical
/// coin: classical_exhaustive once per subset (the value ignores labels).
ScanReport scan(PrimeDim d, CoinKind coin, ScanMode mode, const SeesawConfig& seesaw_config,
                const ScanOptions& options = {});

/// Recomputes min/max fields from per_config.
void aggregate(ScanReport& report);

/// U exp(i delta H) with H a seeded random Hermitian matrix of unit Frobenius norm.
ComplexMatrix perturb_unitary(const ComplexMatrix& u, double delta, std::uint64_t seed);
/// Perturbs every basis with split seeds; the result is a custom-family set.
MubSet perturb_set(const MubSet& set, double delta, std::uint64_t seed);

}  // namespace mubgame
