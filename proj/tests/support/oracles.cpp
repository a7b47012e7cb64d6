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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

Mat to_eigen(const mubgame::ComplexMatrix& m) {
  Mat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

mubgame::ComplexMatrix from_eigen(const Mat& m) {
  mubgame::ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

std::vector<double> eigenvalues(const mubgame::ComplexMatrix& m) {
  const Mat a = to_eigen(m);
  Eigen::SelfAdjointEigenSolver<Mat> solver(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

std::int64_t brute_inverse(std::int64_t x, std::int64_t d) {
  for (std::int64_t y = 1; y < d; ++y) {
    if (((x % d + d) % d) * y % d == 1) return y;
  }
  return 0;
}

int brute_legendre(std::int64_t m, std::int64_t d) {
  const std::int64_t r = (m % d + d) % d;
  if (r == 0) return 0;
  std::set<std::int64_t> squares;
  for (std::int64_t k = 1; k < d; ++k) squares.insert(k * k % d);
  return squares.count(r) ? 1 : -1;
}

double tensor_guessing_probability(const mubgame::MubSet& set, const mubgame::Strategy& s,
                                   mubgame::CoinKind coin) {
  const Eigen::Index d = static_cast<Eigen::Index>(set.size());
  const Eigen::Index n = d * d;
  Mat cu = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < d; ++i) {
    Mat proj = Mat::Zero(d, d);
    proj(i, i) = 1.0;
    cu += Eigen::kroneckerProduct(to_eigen(set[static_cast<std::size_t>(i)]).adjoint(), proj).eval();
  }
  Mat coin_state = coin == mubgame::CoinKind::quantum ? Mat::Constant(d, d, 1.0 / static_cast<double>(d))
                                                      : Mat(Mat::Identity(d, d) / static_cast<double>(d));
  const Mat in = Eigen::kroneckerProduct(to_eigen(s.probe), coin_state).eval();
  const Mat out = cu * in * cu.adjoint();
  double p = 0.0;
  for (Eigen::Index a = 0; a < d; ++a) {
    Mat proj = Mat::Zero(d, d);
    proj(a, a) = 1.0;
    const Mat effect = Eigen::kroneckerProduct(proj, to_eigen(s.povm[static_cast<std::size_t>(a)])).eval();
    p += (effect * out).trace().real();
  }
  return p;
}

double classical_map_value(const mubgame::MubSet& set, const std::vector<std::size_t>& map) {
  const Eigen::Index d = static_cast<Eigen::Index>(set.size());
  Mat sum = Mat::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Eigen::VectorXcd v = to_eigen(set[static_cast<std::size_t>(j)]).col(static_cast<Eigen::Index>(map[j]));
    sum += v * v.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(sum, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff() / static_cast<double>(d);
}

double classical_optimum(const mubgame::MubSet& set) {
  const std::size_t d = set.size();
  std::vector<std::size_t> map(d, 0);
  double best = 0.0;
  for (;;) {
    best = std::max(best, classical_map_value(set, map));
    std::size_t k = 0;
    while (k < d && ++map[k] == d) map[k++] = 0;
    if (k == d) return best;
  }
}

namespace {

Mat random_gaussian(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = g(rng);
      m(i, j) = std::complex<double>(re, g(rng));
    }
  }
  return m;
}

}  // namespace

mubgame::Strategy random_strategy(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  const Eigen::Index n = static_cast<Eigen::Index>(d);
  const Mat g = random_gaussian(n, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace();

  std::vector<Mat> parts;
  Mat total = Mat::Zero(n, n);
  for (std::size_t a = 0; a < d; ++a) {
    const Mat h = random_gaussian(n, rng);
    parts.push_back(h * h.adjoint());
    total += parts.back();
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(total);
  const Mat inv_root = solver.operatorInverseSqrt();

  mubgame::Strategy s;
  s.probe = from_eigen(rho);
  for (const auto& p : parts) s.povm.push_back(from_eigen(inv_root * p * inv_root));
  return s;
}

mubgame::ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Mat g = random_gaussian(static_cast<Eigen::Index>(n), rng);
  return from_eigen(0.5 * (g + g.adjoint()));
}

}  // namespace oracle
