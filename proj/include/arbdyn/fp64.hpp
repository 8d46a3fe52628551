/*
   Copyright 2026 The arbdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

// Word-sized prime-field arithmetic shared by the mod-p layer and the
// modular resultant. Primes up to 2^63; products go through a 128-bit
// intermediate.

namespace arbdyn::fp64 {

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  if (s >= p) s -= p;
  return s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Largest prime strictly below `n` (n > 3).
uint64_t prev_prime(uint64_t n);

// Dense polynomials over F_p: residues in [0, p), constant term first,
// trimmed so the back is nonzero (empty vector = zero polynomial).
using Poly = std::vector<uint64_t>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b, uint64_t p);
Poly sub(const Poly& a, const Poly& b, uint64_t p);
Poly mul(const Poly& a, const Poly& b, uint64_t p);
Poly scalar_mul(const Poly& a, uint64_t c, uint64_t p);
Poly monic(const Poly& a, uint64_t p);
Poly derivative(const Poly& a, uint64_t p);
uint64_t eval(const Poly& a, uint64_t x, uint64_t p);

/// Quotient and remainder; divisor must be nonzero.
void divmod(const Poly& a, const Poly& b, uint64_t p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, uint64_t p);
Poly quot(const Poly& a, const Poly& b, uint64_t p);

/// Monic gcd; gcd(a, 0) = monic(a).
Poly gcd(Poly a, Poly b, uint64_t p);

/// base^exp reduced mod `modulus` (modulus degree >= 1).
Poly pow_mod_poly(Poly base, uint64_t exp, const Poly& modulus, uint64_t p);

/// p-th root of a polynomial with vanishing derivative (coefficients only in
/// degrees divisible by p; Frobenius fixes F_p, so coefficients carry over).
Poly pth_root(const Poly& a, uint64_t p);

}  // namespace arbdyn::fp64
