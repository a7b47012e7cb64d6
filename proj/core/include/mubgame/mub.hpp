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

#include "mubgame/linalg.hpp"
#include "mubgame/numtheory.hpp"

namespace mubgame {

/// Outcome relabelling: a bijection on {0, ..., n-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);
  /// j -> (j + shift) mod n
  static Permutation cyclic_shift(std::size_t n, std::int64_t shift);
  /// Inverse of rank(); lexicographic order over all n! permutations.
  static Permutation from_rank(std::size_t n, std::uint64_t rank);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator[](std::size_t j) const { return mapping_[j]; }
  std::span<const std::size_t> mapping() const { return mapping_; }

  Permutation inverse() const;
  /// (this o other)(j) = this[other[j]]
  Permutation compose(const Permutation& other) const;
  std::uint64_t rank() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

std::uint64_t factorial(std::size_t n);

enum class Family { wf, dpp, wf_plus_computational, qubit, custom };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

struct Provenance {
  Family family = Family::custom;
  /// Index into the d+1 pool [computational, WF a=0, ..., WF a=d-1].
  std::optional<std::size_t> excluded;
  std::vector<Permutation> relabellings;
};

/// d basis unitaries in dimension d. Column j of unitary a is the j-th vector of
/// measurement a. Construction checks unitarity at 1e-9 and, unless the family is
/// custom, pairwise unbiasedness at 1e-9.
class MubSet {
 public:
  MubSet(PrimeDim dim, std::vector<ComplexMatrix> unitaries, Provenance provenance);

  PrimeDim dim() const { return dim_; }
  std::size_t size() const { return unitaries_.size(); }
  const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }
  const ComplexMatrix& operator[](std::size_t a) const { return unitaries_[a]; }
  const Provenance& provenance() const { return provenance_; }

 private:
  PrimeDim dim_;
  std::vector<ComplexMatrix> unitaries_;
  Provenance provenance_;
};

/// (i, j) entry w^{a i^2 + i j} / sqrt(d). Odd primes only.
ComplexMatrix wf_unitary(std::int64_t a, PrimeDim d);
/// (i, j) entry w^{a i^2 + i j - a^2 i} / sqrt(d). Odd primes only.
ComplexMatrix dpp_unitary(std::int64_t a, PrimeDim d);

/// Column j of the result is column pi(j) of U.
ComplexMatrix relabel(const ComplexMatrix& u, const Permutation& pi);

/// Eigenbases of sigma_z, sigma_x and sigma_y.
std::vector<ComplexMatrix> qubit_bases();

/// The d+1 complete MUB pool in canonical order: computational, then WF a=0..d-1
/// (odd d), or the three qubit bases (d = 2).
std::vector<ComplexMatrix> basis_pool(PrimeDim d);

/// Relabelling that turns WF basis a into the relabelled basis a: shift by -a^2.
Permutation dpp_shift(std::int64_t a, PrimeDim d);
std::vector<Permutation> dpp_relabellings(PrimeDim d);
std::vector<Permutation> identity_relabellings(PrimeDim d);

/// Drops pool[excluded] and relabels the remaining d bases in order.
MubSet standard_set(PrimeDim d, std::size_t excluded, std::vector<Permutation> relabellings);
/// The d WF bases with their original labelling (computational basis excluded).
MubSet wf_set(PrimeDim d);
/// {dpp_unitary(a, d)}.
MubSet dpp_set(PrimeDim d);

struct OffendingPair {
  std::size_t a, b, i, j;
};

struct MubReport {
  bool ok = true;
  double worst_deviation = 0.0;
  std::optional<OffendingPair> offending_pair;
};

/// Checks every | (U_a^dagger U_b)_{ij} | against 1/sqrt(d) for a != b.
MubReport verify_mub_bases(std::span<const ComplexMatrix> bases, double tol);
MubReport verify_mub_set(const MubSet& set, double tol);

}  // namespace mubgame
