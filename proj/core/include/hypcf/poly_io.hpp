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

#include <string>

#include "hypcf/fp.hpp"
#include "hypcf/poly.hpp"
#include "hypcf/rat.hpp"
#include "hypcf/ratfunc.hpp"

namespace hypcf {

/// Text grammar shared with the CLI: sums of terms `c*x^k`, `x^k`, `c`;
/// coefficients are integers, fractions a/b, or rational functions of t in
/// (...) groups; whitespace ignored. Parses into Q(t)[x].
Poly<RatFunc> parse_poly_qt(const std::string& text);

/// Same grammar restricted to Q[x]; rejects any t.
Poly<Rat> parse_poly_q(const std::string& text);

/// Same grammar reduced into F_p[x]; rejects t and denominators divisible by p.
Poly<Fp> parse_poly_fp(const std::string& text, std::uint64_t p);

Poly<Rat> to_rat_poly(const Poly<RatFunc>& f);
Poly<Fp> to_fp_poly(const Poly<Rat>& f, std::uint64_t p);
Poly<RatFunc> to_qt_poly(const Poly<Rat>& f);

std::string elem_str(const Rat& x);
std::string elem_str(const Fp& x);
std::string elem_str(const RatFunc& x);

/// Canonical printer; its output re-parses to the same polynomial.
template <class K>
std::string poly_str(const Poly<K>& f, const std::string& var = "x");

template <>
std::string poly_str<Rat>(const Poly<Rat>& f, const std::string& var);
template <>
std::string poly_str<Fp>(const Poly<Fp>& f, const std::string& var);
template <>
std::string poly_str<RatFunc>(const Poly<RatFunc>& f, const std::string& var);

}  // namespace hypcf
