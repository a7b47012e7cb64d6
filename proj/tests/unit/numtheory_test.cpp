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

#include "mubgame/numtheory.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "mubgame/errors.hpp"
#include "oracles.hpp"

namespace mubgame {
namespace {

constexpr std::int64_t kOddPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23};

TEST(PrimeDim, AcceptsPrimesAndRejectsOthers) {
  EXPECT_EQ(PrimeDim(2).value(), 2);
  EXPECT_EQ(PrimeDim(13).residue_mod4(), 1);
  EXPECT_FALSE(PrimeDim(2).is_odd());
  for (std::int64_t n : {-7, 0, 1, 4, 9, 15, 21, 25}) {
    EXPECT_THROW(PrimeDim{n}, ContractViolation) << n;
  }
  try {
    PrimeDim bad(4);
    FAIL();
  } catch (const ContractViolation& e) {
    EXPECT_STREQ(e.what(), "4 is not prime");
  }
}

TEST(IsPrime, MatchesSieveBelow200) {
  std::vector<bool> composite(200, false);
  composite[0] = composite[1] = true;
  for (int p = 2; p < 200; ++p) {
    for (int k = 2 * p; k < 200; k += p) composite[k] = true;
  }
  for (int n = 0; n < 200; ++n) EXPECT_EQ(is_prime(n), !composite[n]) << n;
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(3, PrimeDim(5)), 2);
  EXPECT_EQ(mod_inverse(1, PrimeDim(7)), 1);
  EXPECT_EQ(mod_inverse(2, PrimeDim(11)), 6);
  EXPECT_THROW(mod_inverse(0, PrimeDim(7)), ContractViolation);
  EXPECT_THROW(mod_inverse(14, PrimeDim(7)), ContractViolation);
}

TEST(ModInverse, AgreesWithBruteForce) {
  for (std::int64_t d : kOddPrimes) {
    for (std::int64_t x = -2 * d; x < 2 * d; ++x) {
      if (x % d == 0) continue;
      EXPECT_EQ(mod_inverse(x, PrimeDim(d)), oracle::brute_inverse(x, d)) << x << " mod " << d;
    }
  }
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_symbol(1, PrimeDim(3)), 1);
  EXPECT_EQ(legendre_symbol(2, PrimeDim(3)), -1);
  EXPECT_EQ(legendre_symbol(0, PrimeDim(5)), 0);
  EXPECT_THROW(legendre_symbol(1, PrimeDim(2)), ContractViolation);
}

TEST(Legendre, AgreesWithSquaresAndIsMultiplicative) {
  for (std::int64_t d : kOddPrimes) {
    const PrimeDim p(d);
    for (std::int64_t m = -d; m < 2 * d; ++m) {
      EXPECT_EQ(legendre_symbol(m, p), oracle::brute_legendre(m, d)) << m << " mod " << d;
      for (std::int64_t n = 1; n < d; ++n) {
        EXPECT_EQ(legendre_symbol(m * n, p), legendre_symbol(m, p) * legendre_symbol(n, p));
      }
    }
  }
}

TEST(GaussConstants, InversesAndEpsilon) {
  for (std::int64_t d : {5, 7, 11, 13, 17, 19, 23}) {
    const GaussConstants c = gauss_constants(PrimeDim(d));
    EXPECT_EQ(3 * c.alpha % d, 1);
    EXPECT_EQ(2 * c.beta % d, 1);
    EXPECT_GE(c.alpha, 0);
    EXPECT_LT(c.alpha, d);
    const Complex expected = d % 4 == 1 ? Complex(1, 0) : Complex(0, 1);
    EXPECT_LT(std::abs(c.epsilon - expected), 1e-15);
  }
  EXPECT_EQ(gauss_constants(PrimeDim(5)).alpha, 2);
  EXPECT_THROW(gauss_constants(PrimeDim(3)), ContractViolation);
  EXPECT_THROW(gauss_constants(PrimeDim(2)), ContractViolation);
}

TEST(PowMod, LargeOperandsDoNotOverflow) {
  const std::int64_t m = 1000000007;
  EXPECT_EQ(pow_mod(m - 1, 2, m), 1);
  EXPECT_EQ(pow_mod(2, 0, m), 1);
  EXPECT_EQ(pow_mod(-3, 3, 7), mod_reduce(-27, 7));
  EXPECT_EQ(mod_reduce(-1, 5), 4);
}

TEST(RootOfUnity, ReducesExponent) {
  EXPECT_LT(std::abs(root_of_unity(3, 3) - Complex(1, 0)), 1e-15);
  EXPECT_LT(std::abs(root_of_unity(-1, 4) - Complex(0, -1)), 1e-15);
  EXPECT_EQ(root_of_unity(1000003, 7), root_of_unity(1000003 % 7, 7));
}

TEST(GaussSum, Examples) {
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  EXPECT_LT(std::abs(gauss_sum_closed(0, PrimeDim(5)) - Complex(5, 0)), 1e-12);
  EXPECT_LT(std::abs(gauss_sum_closed(1, PrimeDim(3)) - Complex(0, s3)), 1e-12);
  EXPECT_LT(std::abs(gauss_sum_closed(1, PrimeDim(5)) - Complex(s5, 0)), 1e-12);
  EXPECT_LT(std::abs(gauss_sum_direct(0, PrimeDim(7)) - Complex(7, 0)), 1e-12);
  EXPECT_LT(std::abs(gauss_sum_direct(1, PrimeDim(3)) - Complex(0, s3)), 1e-12);
  EXPECT_LT(std::abs(gauss_sum_direct(2, PrimeDim(5)) - Complex(-s5, 0)), 1e-12);
}

TEST(GaussSum, ClosedFormMatchesDirectSum) {
  for (std::int64_t d : kOddPrimes) {
    for (std::int64_t m = -d; m < 2 * d; ++m) {
      EXPECT_LT(std::abs(gauss_sum_closed(m, PrimeDim(d)) - gauss_sum_direct(m, PrimeDim(d))), 1e-9)
          << "m=" << m << " d=" << d;
    }
  }
}

TEST(GaussSum, ShiftInvariance) {
  for (std::int64_t d : kOddPrimes) {
    for (std::int64_t n = 1; n < d; ++n) {
      Complex base{};
      for (std::int64_t a = 0; a < d; ++a) base += root_of_unity(-n * a * a, d);
      for (std::int64_t s : {std::int64_t{1}, std::int64_t{2}, d - 1, 3 * d + 2}) {
        Complex shifted{};
        for (std::int64_t a = 0; a < d; ++a) shifted += root_of_unity(-n * (a - s) * (a - s), d);
        EXPECT_LT(std::abs(shifted - base), 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace mubgame
