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
#include <string>

#include "mubgame/errors.hpp"

namespace mubgame {

std::string_view to_string(CoinKind coin) { return coin == CoinKind::quantum ? "quantum" : "classical"; }

CoinKind coin_from_string(std::string_view name) {
  if (name == "quantum") return CoinKind::quantum;
  if (name == "classical") return CoinKind::classical;
  throw ContractViolation("unknown coin '" + std::string(name) + "' (expected quantum or classical)");
}

ComplexMatrix coin_state(CoinKind coin, std::size_t d) {
  const double inv = 1.0 / static_cast<double>(d);
  if (coin == CoinKind::classical) return inv * ComplexMatrix::identity(d);
  ComplexMatrix plus(d, d);
  for (auto& z : plus.entries()) z = inv;
  return plus;
}

void validate_strategy(const Strategy& strategy, std::size_t d, double tol) {
  const auto& rho = strategy.probe;
  if (rho.rows() != d || rho.cols() != d) throw ContractViolation("strategy: probe has the wrong shape");
  if (!is_psd(rho, tol)) throw ContractViolation("strategy: probe is not positive semidefinite");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol) throw ContractViolation("strategy: probe trace is not 1");
  if (strategy.povm.size() != d) {
    throw ContractViolation("strategy: expected " + std::to_string(d) + " POVM elements, got " +
                            std::to_string(strategy.povm.size()));
  }
  ComplexMatrix sum(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    const auto& m = strategy.povm[a];
    if (m.rows() != d || m.cols() != d) throw ContractViolation("strategy: POVM element has the wrong shape");
    if (!is_psd(m, tol)) {
      throw ContractViolation("strategy: POVM element " + std::to_string(a) + " is not positive semidefinite");
    }
    sum += m;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(d)) > tol) {
    throw ContractViolation("strategy: POVM elements do not sum to the identity");
  }
}

ComplexMatrix controlled_unitary(const MubSet& set) {
  const std::size_t d = set.size();
  ComplexMatrix cu(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix proj(d, d);
    proj(i, i) = 1.0;
    cu += kron(set[i].adjoint(), proj);
  }
  return cu;
}

double guessing_probability(const MubSet& set, const Strategy& strategy, CoinKind coin, double tol) {
  const std::size_t d = set.size();
  validate_strategy(strategy, d, tol);

  // amp[i][a] = rho U_i |a>, col[i][a] = U_i |a>
  std::vector<std::vector<ComplexVector>> col(d), amp(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      col[i].push_back(set[i].column(a));
      amp[i].push_back(strategy.probe * std::span<const Complex>(col[i][a]));
    }
  }

  Complex total{0.0, 0.0};
  for (std::size_t a = 0; a < d; ++a) {
    const auto& m = strategy.povm[a];
    for (std::size_t i = 0; i < d; ++i) {
      if (coin == CoinKind::classical) {
        total += m(i, i) * inner(col[i][a], amp[i][a]);
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) total += m(i, j) * inner(col[j][a], amp[i][a]);
    }
  }
  return total.real() / static_cast<double>(d);
}

ComplexVector perfect_probe_amplitudes(PrimeDim d) {
  if (!d.is_odd()) {
    throw ContractViolation("perfect_strategy: d = 2 has no closed form here; use the see-saw optimizer");
  }
  const std::int64_t p = d.value();
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  ComplexVector psi(d.size());
  if (p == 3) {
    // 3 has no inverse mod 3; the probe uses ninth roots with k^3 reduced mod 9.
    for (std::int64_t k = 0; k < 3; ++k) psi[static_cast<std::size_t>(k)] = scale * root_of_unity(k * k * k, 9);
    return psi;
  }
  const std::int64_t alpha = gauss_constants(d).alpha;
  for (std::int64_t k = 0; k < p; ++k) {
    const std::int64_t cube = mod_reduce(k * k % p * k, p);
    psi[static_cast<std::size_t>(k)] = scale * root_of_unity(mod_reduce(alpha * cube, p), p);
  }
  return psi;
}

PerfectStrategy perfect_strategy(PrimeDim d) { return perfect_strategy(dpp_set(d)); }

PerfectStrategy perfect_strategy(const MubSet& set) {
  if (set.provenance().family != Family::dpp) {
    throw ContractViolation("perfect_strategy: strategy is construction-specific and requires the dpp family, got '" +
                            std::string(to_string(set.provenance().family)) + "'");
  }
  const PrimeDim d = set.dim();
  const std::size_t n = d.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));

  PerfectStrategy out;
  out.probe_amplitudes = perfect_probe_amplitudes(d);
  out.strategy.probe = ComplexMatrix::outer(out.probe_amplitudes, out.probe_amplitudes);

  // phi_k[a] = <k| U_a^dagger |psi> / sqrt(d)
  out.phi.assign(n, ComplexVector(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < n; ++k) {
      out.phi[k][a] = scale * inner(set[a].column(k), out.probe_amplitudes);
    }
  }

  constexpr double kVanishing = 1e-12;
  std::vector<ComplexVector> basis;
  out.strategy.povm.assign(n, ComplexMatrix(n, n));
  for (std::size_t k = 0; k < n; ++k) {
    const double nrm = norm(out.phi[k]);
    if (nrm * nrm < kVanishing) {
      out.completed_outcomes.push_back(k);
      continue;
    }
    ComplexVector unit = out.phi[k];
    for (auto& z : unit) z /= nrm;
    out.strategy.povm[k] = ComplexMatrix::outer(unit, unit);
    basis.push_back(std::move(unit));
  }

  // Gram-Schmidt over computational basis vectors fills the vanishing outcomes.
  std::size_t next = 0;
  for (std::size_t e = 0; e < n && next < out.completed_outcomes.size(); ++e) {
    ComplexVector v(n, Complex(0.0, 0.0));
    v[e] = 1.0;
    for (const auto& b : basis) {
      const Complex c = inner(b, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * b[i];
    }
    const double nrm = norm(v);
    if (nrm < 1e-6) continue;
    for (auto& z : v) z /= nrm;
    out.strategy.povm[out.completed_outcomes[next++]] = ComplexMatrix::outer(v, v);
    basis.push_back(std::move(v));
  }
  return out;
}

double classical_map_value(const MubSet& set, const OutcomeMap& map) {
  const std::size_t d = set.size();
  if (map.assignment.size() != d) throw ContractViolation("classical_map_value: map length must equal d");
  ComplexMatrix sum(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (map.assignment[j] >= d) throw ContractViolation("classical_map_value: map value out of range");
    const ComplexVector v = set[j].column(map.assignment[j]);
    sum += ComplexMatrix::outer(v, v);
  }
  return max_eigenvalue(sum) / static_cast<double>(d);
}

double classical_upper_bound(PrimeDim d) {
  const double dd = static_cast<double>(d.value());
  return (1.0 + (dd - 1.0) / std::sqrt(dd)) / dd;
}

}  // namespace mubgame
