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

#include "mubgame/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mubgame/errors.hpp"
#include "mubgame/parallel.hpp"

namespace mubgame {

void SeesawConfig::validate() const {
  if (!(epsilon > 0.0)) throw ContractViolation("seesaw: epsilon must be positive");
  if (restarts < 1) throw ContractViolation("seesaw: at least one restart is required");
  if (max_rounds < 1) throw ContractViolation("seesaw: max_rounds must be positive");
}

ComplexMatrix random_density_hs(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (auto& z : g.entries()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  ComplexMatrix rho = hermitian_part(g * g.adjoint());
  rho *= Complex(1.0 / rho.trace().real(), 0.0);
  return rho;
}

namespace {

// cols[i][a] = U_i |a>
std::vector<std::vector<ComplexVector>> basis_columns(const MubSet& set) {
  const std::size_t d = set.size();
  std::vector<std::vector<ComplexVector>> cols(d);
  for (std::size_t i = 0; i < d; ++i) {
    cols[i].reserve(d);
    for (std::size_t a = 0; a < d; ++a) cols[i].push_back(set[i].column(a));
  }
  return cols;
}

double objective(std::span<const ComplexMatrix> povm, std::span<const ComplexMatrix> ops) {
  double v = 0.0;
  for (std::size_t a = 0; a < ops.size(); ++a) v += trace_of_product(povm[a], ops[a]).real();
  return v;
}

void check_operators(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) throw ContractViolation("optimal_measurement: no operators");
  const std::size_t n = ops.front().rows();
  for (const auto& op : ops) {
    if (!op.is_square() || op.rows() != n) throw ContractViolation("optimal_measurement: operators differ in size");
    if (!is_psd(op, 1e-9 * std::max(1.0, op.max_abs()))) {
      throw ContractViolation("optimal_measurement: operator is not Hermitian positive semidefinite");
    }
  }
}

}  // namespace

std::vector<ComplexMatrix> discrimination_operators(const ComplexMatrix& probe, const MubSet& set, CoinKind coin) {
  const std::size_t d = set.size();
  if (probe.rows() != d || !is_density_operator(probe, 1e-9)) {
    throw ContractViolation("discrimination_operators: probe is not a density operator");
  }
  const auto cols = basis_columns(set);
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  for (std::size_t a = 0; a < d; ++a) {
    std::vector<ComplexVector> rho_col(d);
    for (std::size_t s = 0; s < d; ++s) rho_col[s] = probe * std::span<const Complex>(cols[s][a]);
    ComplexMatrix op(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = 0; s < d; ++s) {
        if (coin == CoinKind::classical && r != s) continue;
        op(r, s) = inner(cols[r][a], rho_col[s]);
      }
    }
    ops.push_back(hermitian_part(op));
  }
  return ops;
}

Certificate certificate_check(std::span<const ComplexMatrix> povm, std::span<const ComplexMatrix> ops) {
  if (povm.size() != ops.size() || ops.empty()) throw ContractViolation("certificate_check: size mismatch");
  const std::size_t n = ops.front().rows();
  ComplexMatrix y(n, n);
  for (std::size_t a = 0; a < ops.size(); ++a) y += ops[a] * povm[a];
  Certificate c;
  c.hermitian_defect = max_abs_diff(y, y.adjoint());
  const ComplexMatrix yh = hermitian_part(y);
  c.min_eig_gap = std::numeric_limits<double>::infinity();
  for (const auto& op : ops) c.min_eig_gap = std::min(c.min_eig_gap, min_eigenvalue(yh - op));
  return c;
}

MeasurementSolution solve_measurement(std::span<const ComplexMatrix> ops, const MeasurementOptions& options) {
  if (ops.empty()) throw ContractViolation("solve_measurement: no operators");
  const std::size_t m = ops.size();
  const std::size_t n = ops.front().rows();
  const double share = 1.0 / static_cast<double>(m);
  const double tol = options.gap_tolerance;
  const std::size_t interval = std::max<std::size_t>(1, options.check_interval);

  MeasurementSolution sol;
  sol.povm.assign(m, share * ComplexMatrix::identity(n));

  std::size_t it = 0;
  for (;; ++it) {
    if (it % interval == 0 || it == options.max_iterations) {
      sol.certificate = certificate_check(sol.povm, ops);
      if (sol.certificate.hermitian_defect <= tol && sol.certificate.min_eig_gap >= -tol) {
        sol.converged = true;
        break;
      }
      if (it >= options.max_iterations) break;
    }

    ComplexMatrix l(n, n);
    std::vector<ComplexMatrix> dmd(m);
    for (std::size_t b = 0; b < m; ++b) {
      dmd[b] = ops[b] * sol.povm[b] * ops[b];
      l += dmd[b];
    }
    const EigenResult eig = hermitian_eigen(hermitian_part(l));
    const double cutoff = 1e-12 * std::max(1.0, eig.values.back());
    const ComplexMatrix root_inv = spectral_map(eig, [&](double x) { return x > cutoff ? 1.0 / std::sqrt(x) : 0.0; });
    const ComplexMatrix kernel = spectral_map(eig, [&](double x) { return x > cutoff ? 0.0 : 1.0; });
    const bool has_kernel = eig.values.front() <= cutoff;

    for (std::size_t a = 0; a < m; ++a) {
      ComplexMatrix next = hermitian_part(root_inv * dmd[a] * root_inv);
      if (has_kernel) next += share * kernel;
      sol.povm[a] = std::move(next);
    }
  }
  sol.iterations = it;
  sol.value = objective(sol.povm, ops);
  return sol;
}

MeasurementSolution optimal_measurement(std::span<const ComplexMatrix> ops, const MeasurementOptions& options) {
  check_operators(ops);
  MeasurementSolution sol = solve_measurement(ops, options);
  if (!sol.converged) {
    const double gap = sol.certificate.min_eig_gap;
    throw NonConvergence("optimal_measurement: no certificate after " + std::to_string(sol.iterations) +
                             " iterations (gap " + std::to_string(gap) + ")",
                         std::move(sol));
  }
  return sol;
}

ComplexMatrix probe_objective(std::span<const ComplexMatrix> povm, const MubSet& set, CoinKind coin) {
  const std::size_t d = set.size();
  if (povm.size() != d) throw ContractViolation("optimal_probe: expected one POVM element per outcome");
  const auto cols = basis_columns(set);
  ComplexMatrix k(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    const auto& m = povm[a];
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (coin == CoinKind::classical && i != j) continue;
        const Complex mij = m(i, j);
        if (mij == Complex(0.0, 0.0)) continue;
        const auto& ci = cols[i][a];
        const auto& cj = cols[j][a];
        for (std::size_t r = 0; r < d; ++r) {
          const Complex left = mij * ci[r];
          for (std::size_t s = 0; s < d; ++s) k(r, s) += left * std::conj(cj[s]);
        }
      }
    }
  }
  k *= Complex(1.0 / static_cast<double>(d), 0.0);
  return hermitian_part(k);
}

ProbeSolution optimal_probe(std::span<const ComplexMatrix> povm, const MubSet& set, CoinKind coin) {
  const EigenResult eig = hermitian_eigen(probe_objective(povm, set, coin));
  const std::size_t top = eig.values.size() - 1;
  const ComplexVector v = eig.vectors.column(top);
  return {ComplexMatrix::outer(v, v), eig.values[top]};
}

RestartRecord seesaw_restart(const MubSet& set, CoinKind coin, std::uint64_t seed, double epsilon,
                             std::size_t max_rounds, Strategy* final_strategy) {
  RestartRecord rec;
  rec.seed = seed;
  ComplexMatrix rho = random_density_hs(set.size(), seed);
  std::vector<ComplexMatrix> previous;
  std::vector<ComplexMatrix> povm;
  ProbeSolution probe;
  double accepted = 0.0;
  rec.hit_round_limit = true;

  for (std::size_t round = 0; round < max_rounds; ++round) {
    const auto ops = discrimination_operators(rho, set, coin);
    MeasurementSolution sol = solve_measurement(ops);
    povm = std::move(sol.povm);
    if (coin == CoinKind::classical) {
      for (auto& m : povm) m = m.diagonal_part();
    }
    // The measurement step must not lose ground against the POVM that produced
    // the current probe.
    if (!previous.empty() && objective(previous, ops) > objective(povm, ops)) povm = previous;
    rec.certificate = certificate_check(povm, ops);

    probe = optimal_probe(povm, set, coin);
    rec.trace.push_back(probe.value);
    if (!(probe.value - accepted > epsilon)) {
      rec.hit_round_limit = false;
      break;
    }
    accepted = probe.value;
    rho = probe.probe;
    previous = povm;
  }

  rec.rounds = rec.trace.size();
  rec.final_value = rec.trace.back();
  for (std::size_t k = 1; k < rec.trace.size(); ++k) {
    if (rec.trace[k] < rec.trace[k - 1] - 1e-9) rec.monotone_ok = false;
  }
  if (final_strategy != nullptr) {
    final_strategy->probe = std::move(probe.probe);
    final_strategy->povm = std::move(povm);
  }
  return rec;
}

SeesawResult seesaw(const MubSet& set, CoinKind coin, const SeesawConfig& config) {
  config.validate();
  std::vector<RestartRecord> records(config.restarts);
  std::vector<Strategy> strategies(config.restarts);
  parallel_for(config.restarts, config.threads, [&](std::size_t r) {
    records[r] = seesaw_restart(set, coin, split_seed(config.master_seed, r), config.epsilon, config.max_rounds,
                                &strategies[r]);
  });

  SeesawResult result;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (r == 0 || records[r].final_value > records[result.best_restart].final_value) result.best_restart = r;
  }
  result.best_value = records[result.best_restart].final_value;
  result.best_strategy = std::move(strategies[result.best_restart]);
  result.certificate.is_valid_povm = is_povm(result.best_strategy.povm, 1e-7);
  result.certificate.discrimination_gap = records[result.best_restart].certificate.min_eig_gap;
  result.per_restart = std::move(records);
  return result;
}

}  // namespace mubgame
