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
#include <numbers>
#include <string>

#include "mubgame/errors.hpp"

namespace mubgame {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeDim::PrimeDim(std::int64_t d) : d_(d) {
  if (!is_prime(d)) {
    throw ContractViolation(std::to_string(d) + " is not prime");
  }
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t m) {
  if (m == 1) return 0;
  __extension__ typedef __int128 Wide;
  std::int64_t result = 1;
  std::int64_t b = mod_reduce(base, m);
  while (exponent > 0) {
    if (exponent & 1) result = static_cast<std::int64_t>((static_cast<Wide>(result) * b) % m);
    b = static_cast<std::int64_t>((static_cast<Wide>(b) * b) % m);
    exponent >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t x, PrimeDim d) {
  const std::int64_t p = d.value();
  if (mod_reduce(x, p) == 0) {
    throw ContractViolation("mod_inverse: " + std::to_string(x) + " has no inverse mod " +
                            std::to_string(p));
  }
  return pow_mod(x, p - 2, p);
}

namespace {

void require_odd(PrimeDim d, const char* op) {
  if (!d.is_odd()) throw ContractViolation(std::string(op) + ": requires an odd prime, got 2");
}

}  // namespace

int legendre_symbol(std::int64_t m, PrimeDim d) {
  require_odd(d, "legendre_symbol");
  const std::int64_t p = d.value();
  const std::int64_t r = pow_mod(m, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

GaussConstants gauss_constants(PrimeDim d) {
  require_odd(d, "gauss_constants");
  if (d.value() == 3) throw ContractViolation("gauss_constants: 3 has no inverse mod 3");
  const std::int64_t p = d.value();
  GaussConstants c{};
  c.alpha = pow_mod(3, p - 2, p);
  c.beta = pow_mod(2, p - 2, p);
  c.epsilon = d.residue_mod4() == 1 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
  return c;
}

Complex root_of_unity(std::int64_t k, std::int64_t n) {
  const std::int64_t r = mod_reduce(k, n);
  if (r == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

Complex gauss_sum_closed(std::int64_t m, PrimeDim d) {
  require_odd(d, "gauss_sum_closed");
  const std::int64_t p = d.value();
  if (mod_reduce(m, p) == 0) return {static_cast<double>(p), 0.0};
  const Complex eps = d.residue_mod4() == 1 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
  return static_cast<double>(legendre_symbol(m, d)) * eps * std::sqrt(static_cast<double>(p));
}

Complex gauss_sum_direct(std::int64_t m, PrimeDim d) {
  const std::int64_t p = d.value();
  const std::int64_t mr = mod_reduce(m, p);
  Complex sum{0.0, 0.0};
  for (std::int64_t a = 0; a < p; ++a) {
    sum += root_of_unity(mod_reduce(a * a, p) * mr, p);
  }
  return sum;
}

}  // namespace mubgame
