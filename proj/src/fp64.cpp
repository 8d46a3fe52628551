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

#include "arbdyn/fp64.hpp"

#include <stdexcept>

namespace arbdyn::fp64 {

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  // extended Euclid; requires gcd(a, p) = 1
  int64_t t = 0, new_t = 1;
  uint64_t r = p, new_r = a % p;
  while (new_r != 0) {
    uint64_t q = r / new_r;
    int64_t tmp_t = t - static_cast<int64_t>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
  return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p)) : static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t prev_prime(uint64_t n) {
  if (n <= 3) throw std::invalid_argument("prev_prime: no prime below");
  uint64_t c = n - 1;
  if (c % 2 == 0) --c;
  for (; c >= 3; c -= 2) {
    if (is_prime_u64(c)) return c;
  }
  return 2;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0;
    uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = add_mod(x, y, p);
  }
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0;
    uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = sub_mod(x, y, p);
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  trim(out);
  return out;
}

Poly scalar_mul(const Poly& a, uint64_t c, uint64_t p) {
  c %= p;
  if (c == 0) return {};
  Poly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], c, p);
  trim(out);
  return out;
}

Poly monic(const Poly& a, uint64_t p) {
  if (a.empty()) return a;
  if (a.back() == 1) return a;
  return scalar_mul(a, inv_mod(a.back(), p), p);
}

Poly derivative(const Poly& a, uint64_t p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = mul_mod(a[i], i % p, p);
  }
  trim(out);
  return out;
}

uint64_t eval(const Poly& a, uint64_t x, uint64_t p) {
  uint64_t acc = 0;
  for (size_t i = a.size(); i-- > 0;) {
    acc = add_mod(mul_mod(acc, x, p), a[i], p);
  }
  return acc;
}

void divmod(const Poly& a, const Poly& b, uint64_t p, Poly& q, Poly& r) {
  if (b.empty()) throw std::invalid_argument("fp64::divmod: division by zero polynomial");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const uint64_t lead_inv = inv_mod(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    const size_t shift = r.size() - b.size();
    const uint64_t factor = mul_mod(r.back(), lead_inv, p);
    if (factor != 0) {
      q[shift] = factor;
      for (size_t i = 0; i < b.size(); ++i) {
        r[shift + i] = sub_mod(r[shift + i], mul_mod(factor, b[i], p), p);
      }
    }
    r.pop_back();  // leading term cancelled exactly
    trim(r);
    if (r.size() < b.size()) break;
  }
  trim(q);
  trim(r);
}

Poly rem(const Poly& a, const Poly& b, uint64_t p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

Poly quot(const Poly& a, const Poly& b, uint64_t p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return q;
}

Poly gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly pow_mod_poly(Poly base, uint64_t exp, const Poly& modulus, uint64_t p) {
  if (degree(modulus) < 1)
    throw std::invalid_argument("pow_mod_poly: modulus must be nonconstant");
  Poly result{1 % p};
  trim(result);
  base = rem(base, modulus, p);
  while (exp > 0) {
    if (exp & 1) result = rem(mul(result, base, p), modulus, p);
    base = rem(mul(base, base, p), modulus, p);
    exp >>= 1;
  }
  return result;
}

Poly pth_root(const Poly& a, uint64_t p) {
  if (a.empty()) return {};
  Poly out((a.size() - 1) / p + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % p != 0) throw std::invalid_argument("pth_root: derivative does not vanish");
    out[i / p] = a[i];
  }
  trim(out);
  return out;
}

}  // namespace arbdyn::fp64
