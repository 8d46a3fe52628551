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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace arbdyn {

/// Exact rational scalar used for every coefficient in the library. No
/// floating point enters any exact code path; doubles appear only in report
/// columns.
using Rat = mpq_class;
using Int = mpz_class;

/// Canonical rational from machine integers (den must be nonzero).
Rat make_rat(long num, long den = 1);

/// Parses "num" or "num/den" (base 10) into a canonical rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rational(const std::string& text);

/// Renders as "num" or "num/den", matching the canonical GMP form.
std::string format_rational(const Rat& q);

/// Closest double. Report columns only; never feeds exact logic.
double to_double(const Rat& q);

Rat rat_pow(const Rat& base, unsigned long e);
Int int_pow(long base, unsigned long e);

/// v_p of a nonzero integer. p must be >= 2; n must be nonzero.
long padic_valuation(const Int& n, uint64_t p);

/// v_p of a rational; std::nullopt encodes v_p(0) = +infinity.
std::optional<long> padic_valuation(const Rat& q, uint64_t p);

}  // namespace arbdyn
