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
#include <string_view>
#include <vector>

#include "mubgame/linalg.hpp"
#include "mubgame/mub.hpp"

namespace mubgame {

/// Quantum coin: |+><+| on the control register. Classical coin: I/d.
enum class CoinKind { quantum, classical };

std::string_view to_string(CoinKind coin);
CoinKind coin_from_string(std::string_view name);

ComplexMatrix coin_state(CoinKind coin, std::size_t d);

/// Bob's probe density operator and his d-outcome POVM on the coin space.
struct Strategy {
  ComplexMatrix probe;
  std::vector<ComplexMatrix> povm;
};

/// Throws ContractViolation naming the first failed check (probe PSD / trace,
/// POVM size, element PSD, completeness).
void validate_strategy(const Strategy& strategy, std::size_t d, double tol = 1e-9);

/// Sum_i U_i^dagger (x) |i><i|, system first, coin second.
ComplexMatrix controlled_unitary(const MubSet& set);

/// Average probability that Bob's guess equals Alice's outcome, evaluated as
/// (1/d) sum_{i,j,a} <i|M_a|j> <a|U_j^dagger rho U_i|a> (quantum coin) or its
/// i = j terms only (classical coin).
double guessing_probability(const MubSet& set, const Strategy& strategy, CoinKind coin, double tol = 1e-9);

/// Closed-form probe and projective measurement that guess perfectly against
/// the relabelled WF set.
struct PerfectStrategy {
  Strategy strategy;
  ComplexVector probe_amplitudes;
  /// phi_k = (1/sqrt d) sum_a <k|U_a^dagger|psi> |a>, unnormalized.
  std::vector<ComplexVector> phi;
  /// Outcomes whose phi_k vanishes (this happens for d = 2 mod 3). Alice never
  /// reports them, so their POVM elements are filled in from the orthogonal
  /// complement of the other phi_k.
  std::vector<std::size_t> completed_outcomes;
};

ComplexVector perfect_probe_amplitudes(PrimeDim d);
PerfectStrategy perfect_strategy(PrimeDim d);
/// Throws ContractViolation unless the set is from the relabelled WF family.
PerfectStrategy perfect_strategy(const MubSet& set);

/// n(j): Alice's guessed outcome for basis j. Not necessarily injective.
struct OutcomeMap {
  std::vector<std::size_t> assignment;
};

/// (1/d) lambda_max[ sum_j U_j |n(j)><n(j)| U_j^dagger ]
double classical_map_value(const MubSet& set, const OutcomeMap& map);

/// (1/d) (1 + (d - 1) / sqrt(d))
double classical_upper_bound(PrimeDim d);

}  // namespace mubgame
