/*
   Copyright 2026 the hypcf authors

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

#include "hypcf/errors.hpp"
#include "hypcf/field.hpp"

namespace hypcf {

using Int = mpz_class;

/// Arbitrary-precision rationals, always in lowest terms with positive
/// denominator (mpq canonical form).
using Rat = mpq_class;

/// Sentinel for valuations: val(0) = +infinity.
inline constexpr int kValInf = 1 << 28;

inline Rat rat_from_int(long n) { return Rat(n); }

inline Rat rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

int int_val(const Int& n, const Int& p);

/// p-adic valuation of a rational; kValInf for zero.
int rat_val(const Rat& x, const Int& p);

/// Exact square root if x is a square in Q (nonnegative, num and den squares).
std::optional<Rat> rat_sqrt(const Rat& x);

std::string rat_str(const Rat& x);

/// log|x| computed from the mpz mantissa/exponent split (no overflow).
double log_int(const Int& n);
double log_rat_abs(const Rat& x);

template <>
struct FieldOps<Rat> {
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static Rat from_int(const Rat&, long n) { return Rat(n); }
    static int cmp(const Rat& a, const Rat& b) { return ::cmp(a, b); }
    static std::optional<Rat> sqrt(const Rat& x) { return rat_sqrt(x); }
};

}  // namespace hypcf
