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

#include <complex>
#include <cstdint>

namespace mubgame {

using Complex = std::complex<double>;

bool is_prime(std::int64_t n);

/// A prime dimension, checked by trial division on construction.
class PrimeDim {
 public:
  explicit PrimeDim(std::int64_t d);

  std::int64_t value() const { return d_; }
  std::size_t size() const { return static_cast<std::size_t>(d_); }
  bool is_odd() const { return d_ != 2; }
  /// d mod 4; 1 or 3 for odd primes, 2 for d = 2.
  int residue_mod4() const { return static_cast<int>(d_ % 4); }

  friend bool operator==(PrimeDim, PrimeDim) = default;

 private:
  std::int64_t d_;
};

/// Non-negative representative of x mod m (m > 0).
std::int64_t mod_reduce(std::int64_t x, std::int64_t m);

std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t m);

/// x^{-1} mod d computed as x^{d-2} mod d. Throws for x = 0 mod d.
std::int64_t mod_inverse(std::int64_t x, PrimeDim d);

/// Euler's criterion. Returns -1, 0 or +1. Odd primes only.
int legendre_symbol(std::int64_t m, PrimeDim d);

struct GaussConstants {
  std::int64_t alpha;  // 3^{-1} mod d
  std::int64_t beta;   // 2^{-1} mod d
  Complex epsilon;     // 1 if d = 1 (mod 4), i if d = 3 (mod 4)
};

/// Constants for odd primes d > 3 (3 has no inverse mod 3).
GaussConstants gauss_constants(PrimeDim d);

/// exp(2 pi i k / n) with k reduced mod n first.
Complex root_of_unity(std::int64_t k, std::int64_t n);

/// Closed form of sum_a w^{a^2 m}: (m/d) eps_d sqrt(d), or d when m = 0 mod d.
Complex gauss_sum_closed(std::int64_t m, PrimeDim d);

/// Literal sum_{a=0}^{d-1} w^{a^2 m}, w = exp(2 pi i / d).
Complex gauss_sum_direct(std::int64_t m, PrimeDim d);

}  // namespace mubgame
