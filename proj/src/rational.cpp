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

#include "arbdyn/rational.hpp"

#include <stdexcept>

namespace arbdyn {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rat& q) { return q.get_str(); }

double to_double(const Rat& q) { return q.get_d(); }

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return out;  // powers of a canonical fraction stay canonical
}

Int int_pow(long base, unsigned long e) {
  Int out;
  Int b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

long padic_valuation(const Int& n, uint64_t p) {
  if (p < 2) throw std::invalid_argument("padic_valuation: p must be >= 2");
  if (sgn(n) == 0) throw std::invalid_argument("padic_valuation: zero integer");
  Int pz;
  mpz_set_ui(pz.get_mpz_t(), p);
  Int stripped;
  return static_cast<long>(
      mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

std::optional<long> padic_valuation(const Rat& q, uint64_t p) {
  if (sgn(q) == 0) return std::nullopt;
  const Int num(q.get_num());
  const Int den(q.get_den());
  return padic_valuation(num, p) - padic_valuation(den, p);
}

}  // namespace arbdyn
