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

#include "mubgame/game.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mubgame/errors.hpp"
#include "mubgame/optimize.hpp"
#include "oracles.hpp"

namespace mubgame {
namespace {

constexpr std::int64_t kPerfectDims[] = {3, 5, 7, 11, 13};

Strategy uniform_strategy(std::size_t d) {
  const ComplexMatrix share = (1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d);
  return {share, std::vector<ComplexMatrix>(d, share)};
}

MubSet pauli_set() { return standard_set(PrimeDim(2), 0, identity_relabellings(PrimeDim(2))); }

TEST(CoinState, PureAndMixed) {
  const ComplexMatrix q = coin_state(CoinKind::quantum, 3);
  const ComplexMatrix c = coin_state(CoinKind::classical, 3);
  EXPECT_NEAR(q(0, 2).real(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR((q * q - q).max_abs(), 0.0, 1e-15);
  EXPECT_NEAR(c(0, 2).real(), 0.0, 1e-15);
  EXPECT_EQ(coin_from_string(to_string(CoinKind::classical)), CoinKind::classical);
  EXPECT_THROW(coin_from_string("bent"), ContractViolation);
}

TEST(ControlledUnitary, BlockStructure) {
  const MubSet pauli = pauli_set();
  const ComplexMatrix cu = controlled_unitary(pauli);
  EXPECT_TRUE(is_unitary(cu, 1e-9));
  // System first, coin second: entry ((r, i), (s, j)) = delta_ij U_i^dagger(r, s).
  for (std::size_t i = 0; i < 2; ++i) {
    const ComplexMatrix ud = pauli[i].adjoint();
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t s = 0; s < 2; ++s) {
        EXPECT_LT(std::abs(cu(r * 2 + i, s * 2 + i) - ud(r, s)), 1e-15);
        EXPECT_EQ(cu(r * 2 + i, s * 2 + (1 - i)), Complex(0, 0));
      }
    }
  }
  const MubSet wf = wf_set(PrimeDim(3));
  const ComplexMatrix cu3 = controlled_unitary(wf);
  EXPECT_TRUE(is_unitary(cu3, 1e-9));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t s = 0; s < 3; ++s) {
      EXPECT_LT(std::abs(cu3(r * 3 + 2, s * 3 + 2) - wf_unitary(2, PrimeDim(3)).adjoint()(r, s)), 1e-15);
    }
  }
}

TEST(GuessingProbability, UniformStrategyGivesOneOverD) {
  for (std::int64_t d : {2, 3, 5, 7}) {
    const MubSet set = standard_set(PrimeDim(d), 0, identity_relabellings(PrimeDim(d)));
    for (CoinKind coin : {CoinKind::quantum, CoinKind::classical}) {
      EXPECT_NEAR(guessing_probability(set, uniform_strategy(d), coin), 1.0 / double(d), 1e-12);
    }
  }
}

TEST(GuessingProbability, ReducedFormulaMatchesTensorFormula) {
  for (std::int64_t d : {2, 3, 5}) {
    const PrimeDim p(d);
    for (std::size_t ex = 0; ex <= p.size(); ++ex) {
      std::vector<Permutation> rel;
      for (std::size_t a = 0; a < p.size(); ++a) rel.push_back(Permutation::from_rank(p.size(), (3 * a + ex) % factorial(p.size())));
      const MubSet set = standard_set(p, ex, rel);
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const Strategy s = oracle::random_strategy(p.size(), seed + 10 * ex);
        for (CoinKind coin : {CoinKind::quantum, CoinKind::classical}) {
          EXPECT_NEAR(guessing_probability(set, s, coin), oracle::tensor_guessing_probability(set, s, coin), 1e-9)
              << "d=" << d << " excluded=" << ex << " seed=" << seed;
        }
      }
    }
  }
}

TEST(GuessingProbability, RejectsInvalidStrategies) {
  const MubSet set = wf_set(PrimeDim(3));
  Strategy s = uniform_strategy(3);
  s.probe = ComplexMatrix::identity(3);
  EXPECT_THROW(guessing_probability(set, s, CoinKind::quantum), ContractViolation);
  s = uniform_strategy(3);
  s.povm.pop_back();
  EXPECT_THROW(guessing_probability(set, s, CoinKind::quantum), ContractViolation);
  s = uniform_strategy(3);
  s.povm[0] = ComplexMatrix::identity(3);
  EXPECT_THROW(guessing_probability(set, s, CoinKind::quantum), ContractViolation);
}

TEST(PerfectStrategy, ProbeAmplitudes) {
  const ComplexVector a3 = perfect_probe_amplitudes(PrimeDim(3));
  const double r3 = 1.0 / std::sqrt(3.0);
  EXPECT_LT(std::abs(a3[0] - r3 * Complex(1, 0)), 1e-12);
  EXPECT_LT(std::abs(a3[1] - r3 * root_of_unity(1, 9)), 1e-12);
  EXPECT_LT(std::abs(a3[2] - r3 * root_of_unity(8, 9)), 1e-12);

  const ComplexVector a5 = perfect_probe_amplitudes(PrimeDim(5));
  for (std::int64_t k = 0; k < 5; ++k) {
    EXPECT_LT(std::abs(a5[k] - root_of_unity(2 * k * k * k, 5) / std::sqrt(5.0)), 1e-12);
  }
  EXPECT_THROW(perfect_probe_amplitudes(PrimeDim(2)), ContractViolation);
}

TEST(PerfectStrategy, PerfectGuessingAndProjectivity) {
  for (std::int64_t d : kPerfectDims) {
    const MubSet set = dpp_set(PrimeDim(d));
    const PerfectStrategy ps = perfect_strategy(set);
    EXPECT_TRUE(is_projective_povm(ps.strategy.povm, 1e-9)) << d;
    EXPECT_TRUE(is_density_operator(ps.strategy.probe));
    EXPECT_NEAR(guessing_probability(set, ps.strategy, CoinKind::quantum), 1.0, 1e-9) << d;
    for (std::size_t i = 0; i < ps.phi.size(); ++i) {
      for (std::size_t j = 0; j < ps.phi.size(); ++j) {
        if (i != j) EXPECT_LT(std::abs(inner(ps.phi[i], ps.phi[j])), 1e-9);
      }
    }
  }
  const MubSet set3 = dpp_set(PrimeDim(3));
  const PerfectStrategy ps3 = perfect_strategy(set3);
  EXPECT_NEAR(oracle::tensor_guessing_probability(set3, ps3.strategy, CoinKind::quantum), 1.0, 1e-9);
}

TEST(PerfectStrategy, VanishingOutcomesOnlyWhenDIsTwoModThree) {
  for (std::int64_t d : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const PerfectStrategy ps = perfect_strategy(PrimeDim(d));
    if (d % 3 == 2) {
      EXPECT_FALSE(ps.completed_outcomes.empty()) << d;
    } else {
      EXPECT_TRUE(ps.completed_outcomes.empty()) << d;
    }
    for (std::size_t k : ps.completed_outcomes) EXPECT_LT(norm(ps.phi[k]), 1e-6);
    EXPECT_NEAR(guessing_probability(dpp_set(PrimeDim(d)), ps.strategy, CoinKind::quantum), 1.0, 1e-9) << d;
  }
}

TEST(PerfectStrategy, BoundToTheRelabelledFamily) {
  EXPECT_THROW(perfect_strategy(wf_set(PrimeDim(5))), ContractViolation);
  const PerfectStrategy ps = perfect_strategy(PrimeDim(3));
  EXPECT_LT(guessing_probability(wf_set(PrimeDim(3)), ps.strategy, CoinKind::quantum), 1.0 - 1e-3);
}

TEST(ClassicalMapValue, QubitBestMapAttainsBound) {
  const MubSet pauli = pauli_set();
  double best = 0.0;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) best = std::max(best, classical_map_value(pauli, {{a, b}}));
  }
  const double expected = 0.5 * (1.0 + 1.0 / std::sqrt(2.0));
  EXPECT_NEAR(best, expected, 1e-12);
  EXPECT_NEAR(classical_upper_bound(PrimeDim(2)), expected, 1e-15);
}

TEST(ClassicalMapValue, AgreesWithEigenOracleAndTrivialBound) {
  const MubSet wf = wf_set(PrimeDim(3));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        const std::vector<std::size_t> m{a, b, c};
        const double v = classical_map_value(wf, {m});
        EXPECT_NEAR(v, oracle::classical_map_value(wf, m), 1e-12);
        EXPECT_GE(v, 1.0 / 3.0 - 1e-12);
        EXPECT_LE(v, classical_upper_bound(PrimeDim(3)) + 1e-12);
      }
    }
  }
  EXPECT_THROW(classical_map_value(wf, {{0, 1}}), ContractViolation);
  EXPECT_THROW(classical_map_value(wf, {{0, 1, 3}}), ContractViolation);
}

TEST(ClassicalMapValue, LabellingInvariance) {
  const PrimeDim p(5);
  const MubSet base = wf_set(p);
  std::vector<Permutation> rel;
  for (std::size_t a = 0; a < 5; ++a) rel.push_back(Permutation::from_rank(5, 17 * a + 3));
  const MubSet relabelled = standard_set(p, 0, rel);
  const std::vector<std::size_t> map{0, 3, 1, 4, 2};
  std::vector<std::size_t> pulled(5);
  for (std::size_t j = 0; j < 5; ++j) pulled[j] = rel[j][map[j]];
  EXPECT_NEAR(classical_map_value(relabelled, {map}), classical_map_value(base, {pulled}), 1e-12);
}

TEST(ClassicalUpperBound, FormulaAndDecay) {
  EXPECT_NEAR(classical_upper_bound(PrimeDim(3)), (1.0 + 2.0 / std::sqrt(3.0)) / 3.0, 1e-15);
  EXPECT_LE(oracle::kClassicalWf3, classical_upper_bound(PrimeDim(3)));
  double previous = 1.0;
  for (std::int64_t d : {2, 3, 5, 7, 11, 13, 101, 1009}) {
    const double v = classical_upper_bound(PrimeDim(d));
    EXPECT_LT(v, previous);
    previous = v;
  }
  EXPECT_LT(previous, 0.04);
}

}  // namespace
}  // namespace mubgame
