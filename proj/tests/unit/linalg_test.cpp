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

#include "mubgame/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "mubgame/errors.hpp"
#include "oracles.hpp"

namespace mubgame {
namespace {

ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }

TEST(ComplexMatrix, ShapeAndAccess) {
  ComplexMatrix m(2, 3);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_FALSE(m.is_square());
  m(1, 2) = Complex(1, -1);
  EXPECT_EQ(m.adjoint()(2, 1), Complex(1, 1));
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), ContractViolation);
  EXPECT_THROW(m * m, ContractViolation);
}

TEST(ComplexMatrix, OuterProductIsKetBra) {
  const ComplexVector a{Complex(1, 0), Complex(0, 1)};
  const ComplexVector b{Complex(0, 1), Complex(2, 0)};
  const ComplexMatrix o = ComplexMatrix::outer(a, b);
  EXPECT_EQ(o(1, 0), Complex(0, 1) * std::conj(Complex(0, 1)));
  EXPECT_EQ(o(0, 1), Complex(2, 0));
  EXPECT_EQ(inner(b, a), std::conj(b[0]) * a[0] + std::conj(b[1]) * a[1]);
}

TEST(HermitianEigen, Examples) {
  const auto id = hermitian_eigen(ComplexMatrix::identity(3));
  for (double v : id.values) EXPECT_NEAR(v, 1.0, 1e-12);
  const std::vector<Complex> diag{0.8, 0.2};
  const auto dg = hermitian_eigen(ComplexMatrix::diagonal(diag));
  EXPECT_NEAR(dg.values[0], 0.2, 1e-12);
  EXPECT_NEAR(dg.values[1], 0.8, 1e-12);
  const auto px = hermitian_eigen(pauli_x());
  EXPECT_NEAR(px.values[0], -1.0, 1e-12);
  EXPECT_NEAR(px.values[1], 1.0, 1e-12);
}

TEST(HermitianEigen, RejectsNonHermitian) {
  const ComplexMatrix m{{0, 1}, {0, 0}};
  EXPECT_THROW(hermitian_eigen(m), ContractViolation);
  EXPECT_THROW(hermitian_eigen(ComplexMatrix(2, 3)), ContractViolation);
}

TEST(HermitianEigen, AgreesWithEigenOnRandomMatrices) {
  for (std::size_t n : {1u, 2u, 3u, 5u, 9u, 25u}) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const ComplexMatrix m = oracle::random_hermitian(n, seed * 31 + n);
      const EigenResult r = hermitian_eigen(m);
      const auto expected = oracle::eigenvalues(m);
      ASSERT_EQ(r.values.size(), n);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(r.values[k], expected[k], 1e-9);
      EXPECT_TRUE(std::is_sorted(r.values.begin(), r.values.end()));
      EXPECT_NEAR(m.trace().real(), std::accumulate(r.values.begin(), r.values.end(), 0.0), 1e-9);
      EXPECT_TRUE(is_unitary(r.vectors, 1e-9));
      const ComplexMatrix rebuilt = spectral_map(r, [](double x) { return x; });
      EXPECT_LT(max_abs_diff(rebuilt, m), 1e-9);
    }
  }
}

TEST(HermitianEigen, RecoversPrescribedSpectrum) {
  const std::size_t n = 6;
  const EigenResult basis = hermitian_eigen(oracle::random_hermitian(n, 99));
  const std::vector<double> lambda{-2.0, -0.5, 0.0, 1e-3, 0.7, 3.0};
  std::vector<Complex> diag(lambda.begin(), lambda.end());
  const ComplexMatrix m = basis.vectors * ComplexMatrix::diagonal(diag) * basis.vectors.adjoint();
  const EigenResult r = hermitian_eigen(m);
  for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(r.values[k], lambda[k], 1e-8);
}

TEST(HermitianEigen, LargestSizeUsedByTensorChecks) {
  const ComplexMatrix m = oracle::random_hermitian(169, 5);
  const auto expected = oracle::eigenvalues(m);
  const EigenResult r = hermitian_eigen(m);
  EXPECT_NEAR(r.values.front(), expected.front(), 1e-8);
  EXPECT_NEAR(r.values.back(), expected.back(), 1e-8);
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
  const ComplexMatrix k = kron(pauli_x(), ComplexMatrix::identity(2));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const bool one = (i < 2) != (j < 2) && i % 2 == j % 2;
      EXPECT_EQ(k(i, j), one ? Complex(1, 0) : Complex(0, 0));
    }
  }
  const ComplexMatrix c{{Complex(2, 1)}};
  const ComplexMatrix b = oracle::random_hermitian(3, 1);
  EXPECT_LT(max_abs_diff(kron(c, b), Complex(2, 1) * b), 1e-15);
}

TEST(Kron, MixedProductProperty) {
  const ComplexMatrix a = oracle::random_hermitian(2, 1);
  const ComplexMatrix b = oracle::random_hermitian(3, 2);
  const ComplexMatrix c = oracle::random_hermitian(2, 3);
  const ComplexMatrix d = oracle::random_hermitian(3, 4);
  EXPECT_LT(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-9);
}

TEST(Povm, ProjectiveExamples) {
  const std::vector<Complex> e0{1, 0};
  const std::vector<Complex> e1{0, 1};
  const std::vector<ComplexMatrix> proj{ComplexMatrix::diagonal(e0), ComplexMatrix::diagonal(e1)};
  EXPECT_TRUE(is_povm(proj, 1e-9));
  EXPECT_TRUE(is_projective_povm(proj, 1e-9));
  const std::vector<ComplexMatrix> half{0.5 * ComplexMatrix::identity(2), 0.5 * ComplexMatrix::identity(2)};
  EXPECT_TRUE(is_povm(half, 1e-9));
  EXPECT_FALSE(is_projective_povm(half, 1e-9));
  const std::vector<ComplexMatrix> broken{ComplexMatrix::identity(2), ComplexMatrix::diagonal(e1)};
  EXPECT_FALSE(is_povm(broken, 1e-9));
  EXPECT_THROW(is_povm(std::vector<ComplexMatrix>{}, 1e-9), ContractViolation);
}

TEST(Predicates, DensityAndUnitary) {
  EXPECT_TRUE(is_density_operator(0.5 * ComplexMatrix::identity(2)));
  EXPECT_FALSE(is_density_operator(ComplexMatrix::identity(2)));
  EXPECT_FALSE(is_psd(pauli_x()));
  EXPECT_TRUE(is_unitary(pauli_x(), 1e-12));
  EXPECT_FALSE(is_unitary(2.0 * pauli_x(), 1e-12));
  EXPECT_NEAR(max_eigenvalue(pauli_x()), 1.0, 1e-12);
  EXPECT_NEAR(min_eigenvalue(pauli_x()), -1.0, 1e-12);
}

TEST(TraceOfProduct, MatchesExplicitProduct) {
  const ComplexMatrix a = oracle::random_hermitian(4, 7);
  const ComplexMatrix b = oracle::random_hermitian(4, 8);
  EXPECT_LT(std::abs(trace_of_product(a, b) - (a * b).trace()), 1e-12);
}

}  // namespace
}  // namespace mubgame
