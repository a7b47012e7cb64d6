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

#include "mubgame/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mubgame/errors.hpp"

namespace mubgame {

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<std::size_t> sorted = mapping_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != k) throw ContractViolation("Permutation: mapping is not a bijection");
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::cyclic_shift(std::size_t n, std::int64_t shift) {
  std::vector<std::size_t> m(n);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t j = 0; j < n; ++j) {
    m[j] = static_cast<std::size_t>(mod_reduce(static_cast<std::int64_t>(j) + shift, nn));
  }
  return Permutation(std::move(m));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Permutation Permutation::from_rank(std::size_t n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw ContractViolation("Permutation::from_rank: rank out of range");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> m;
  m.reserve(n);
  for (std::size_t k = n; k > 0; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    m.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t j = 0; j < mapping_.size(); ++j) inv[mapping_[j]] = j;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw ContractViolation("Permutation::compose: size mismatch");
  std::vector<std::size_t> m(size());
  for (std::size_t j = 0; j < size(); ++j) m[j] = mapping_[other[j]];
  return Permutation(std::move(m));
}

std::uint64_t Permutation::rank() const {
  const std::size_t n = mapping_.size();
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t smaller = 0;
    for (std::size_t l = k + 1; l < n; ++l) {
      if (mapping_[l] < mapping_[k]) ++smaller;
    }
    r += smaller * factorial(n - 1 - k);
  }
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < mapping_.size(); ++j) {
    if (mapping_[j] != j) return false;
  }
  return true;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::wf: return "wf";
    case Family::dpp: return "dpp";
    case Family::wf_plus_computational: return "wf-plus-computational";
    case Family::qubit: return "qubit";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::wf, Family::dpp, Family::wf_plus_computational, Family::qubit, Family::custom}) {
    if (to_string(f) == name) return f;
  }
  throw ContractViolation("unknown MUB family '" + std::string(name) + "'");
}

MubSet::MubSet(PrimeDim dim, std::vector<ComplexMatrix> unitaries, Provenance provenance)
    : dim_(dim), unitaries_(std::move(unitaries)), provenance_(std::move(provenance)) {
  const std::size_t d = dim_.size();
  if (unitaries_.size() != d) {
    throw ContractViolation("MubSet: expected " + std::to_string(d) + " unitaries, got " +
                            std::to_string(unitaries_.size()));
  }
  for (std::size_t a = 0; a < d; ++a) {
    const auto& u = unitaries_[a];
    if (u.rows() != d || u.cols() != d) throw ContractViolation("MubSet: unitary has the wrong shape");
    if (!is_unitary(u, 1e-9)) throw ContractViolation("MubSet: element " + std::to_string(a) + " is not unitary");
  }
  if (!provenance_.relabellings.empty() && provenance_.relabellings.size() != d) {
    throw ContractViolation("MubSet: provenance must list one relabelling per basis");
  }
  if (provenance_.family != Family::custom) {
    const MubReport report = verify_mub_set(*this, 1e-9);
    if (!report.ok) {
      throw ContractViolation("MubSet: bases are not mutually unbiased (deviation " +
                              std::to_string(report.worst_deviation) + ")");
    }
  }
}

namespace {

void require_odd(PrimeDim d, const char* op) {
  if (!d.is_odd()) {
    throw ContractViolation(std::string(op) + ": the quadratic-phase construction does not give MUBs for d = 2");
  }
}

ComplexMatrix phase_matrix(PrimeDim d, std::int64_t a, bool dpp) {
  const std::int64_t p = d.value();
  if (a < 0 || a >= p) throw ContractViolation("basis index out of range");
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  ComplexMatrix u(d.size(), d.size());
  for (std::int64_t i = 0; i < p; ++i) {
    for (std::int64_t j = 0; j < p; ++j) {
      std::int64_t e = a * i * i + i * j;
      if (dpp) e -= a * a * i;
      u(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = scale * root_of_unity(mod_reduce(e, p), p);
    }
  }
  return u;
}

}  // namespace

ComplexMatrix wf_unitary(std::int64_t a, PrimeDim d) {
  require_odd(d, "wf_unitary");
  return phase_matrix(d, a, false);
}

ComplexMatrix dpp_unitary(std::int64_t a, PrimeDim d) {
  require_odd(d, "dpp_unitary");
  return phase_matrix(d, a, true);
}

ComplexMatrix relabel(const ComplexMatrix& u, const Permutation& pi) {
  if (u.cols() != pi.size()) throw ContractViolation("relabel: permutation size does not match the basis");
  ComplexMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < u.cols(); ++j) out(i, j) = u(i, pi[j]);
  }
  return out;
}

std::vector<ComplexMatrix> qubit_bases() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i1(0.0, 1.0);
  return {
      ComplexMatrix::identity(2),
      ComplexMatrix{{r, r}, {r, -r}},
      ComplexMatrix{{r, r}, {i1 * r, -i1 * r}},
  };
}

std::vector<ComplexMatrix> basis_pool(PrimeDim d) {
  if (!d.is_odd()) return qubit_bases();
  std::vector<ComplexMatrix> pool;
  pool.reserve(d.size() + 1);
  pool.push_back(ComplexMatrix::identity(d.size()));
  for (std::int64_t a = 0; a < d.value(); ++a) pool.push_back(wf_unitary(a, d));
  return pool;
}

Permutation dpp_shift(std::int64_t a, PrimeDim d) {
  return Permutation::cyclic_shift(d.size(), -(a * a));
}

std::vector<Permutation> dpp_relabellings(PrimeDim d) {
  require_odd(d, "dpp_relabellings");
  std::vector<Permutation> out;
  for (std::int64_t a = 0; a < d.value(); ++a) out.push_back(dpp_shift(a, d));
  return out;
}

std::vector<Permutation> identity_relabellings(PrimeDim d) {
  return std::vector<Permutation>(d.size(), Permutation::identity(d.size()));
}

MubSet standard_set(PrimeDim d, std::size_t excluded, std::vector<Permutation> relabellings) {
  const std::size_t n = d.size();
  if (excluded > n) {
    throw ContractViolation("standard_set: excluded index " + std::to_string(excluded) + " outside 0.." +
                            std::to_string(n));
  }
  if (relabellings.size() != n) {
    throw ContractViolation("standard_set: expected " + std::to_string(n) + " relabellings, got " +
                            std::to_string(relabellings.size()));
  }
  const auto pool = basis_pool(d);
  std::vector<ComplexMatrix> chosen;
  chosen.reserve(n);
  std::size_t slot = 0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (k == excluded) continue;
    chosen.push_back(relabel(pool[k], relabellings[slot]));
    ++slot;
  }

  Provenance prov;
  prov.excluded = excluded;
  if (!d.is_odd()) {
    prov.family = Family::qubit;
  } else if (excluded != 0) {
    prov.family = Family::wf_plus_computational;
  } else {
    prov.family = relabellings == dpp_relabellings(d) ? Family::dpp : Family::wf;
  }
  prov.relabellings = std::move(relabellings);
  return MubSet(d, std::move(chosen), std::move(prov));
}

MubSet wf_set(PrimeDim d) { return standard_set(d, 0, identity_relabellings(d)); }

MubSet dpp_set(PrimeDim d) {
  std::vector<ComplexMatrix> us;
  for (std::int64_t a = 0; a < d.value(); ++a) us.push_back(dpp_unitary(a, d));
  Provenance prov{Family::dpp, std::size_t{0}, dpp_relabellings(d)};
  return MubSet(d, std::move(us), std::move(prov));
}

MubReport verify_mub_bases(std::span<const ComplexMatrix> bases, double tol) {
  MubReport report;
  if (bases.empty()) return report;
  const std::size_t n = bases.front().rows();
  const double target = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = 0; b < bases.size(); ++b) {
      if (a == b) continue;
      const ComplexMatrix overlap = bases[a].adjoint() * bases[b];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const double dev = std::abs(std::abs(overlap(i, j)) - target);
          if (dev > report.worst_deviation) {
            report.worst_deviation = dev;
            report.offending_pair = OffendingPair{a, b, i, j};
          }
        }
      }
    }
  }
  report.ok = report.worst_deviation <= tol;
  if (report.ok) report.offending_pair.reset();
  return report;
}

MubReport verify_mub_set(const MubSet& set, double tol) { return verify_mub_bases(set.unitaries(), tol); }

}  // namespace mubgame
