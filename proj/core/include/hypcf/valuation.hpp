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
#include <utility>

#include "hypcf/fp.hpp"
#include "hypcf/poly.hpp"
#include "hypcf/rat.hpp"
#include "hypcf/ratfunc.hpp"

namespace hypcf {

/// p-adic valuation on Q with residue field F_p. Odd primes only: all the
/// square-root machinery assumes residue characteristic != 2.
class PAdicValuation {
  public:
    using Field = Rat;
    using Residue = Fp;

    explicit PAdicValuation(std::uint64_t p) : p_(p) {
        if (p == 2) throw InvalidInput("residue characteristic 2 is not supported");
        if (!is_prime_u64(p)) throw InvalidInput("p-adic valuation needs a prime");
    }

    std::uint64_t prime() const { return p_; }
    std::string name() const { return "nu_" + std::to_string(p_); }

    int val(const Rat& x) const { return rat_val(x, Int(static_cast<unsigned long>(p_))); }

    Fp reduce(const Rat& x) const {
        if (is_zero(x)) return Fp(0, p_);
        if (val(x) < 0) throw NegativeValuation("reduce: negative p-adic valuation");
        Int p(static_cast<unsigned long>(p_));
        Int num = x.get_num() % p;
        Int den = x.get_den() % p;
        Fp fnum = Fp::from_signed(num.get_si(), p_);
        Fp fden = Fp::from_signed(den.get_si(), p_);
        return fnum / fden;
    }

    Rat uniformizer_pow(int e) const { return rat_pow(Rat(static_cast<unsigned long>(p_)), e); }

  private:
    std::uint64_t p_;
};

/// Zero-order valuation ord_{t = t0} on Q(t), residue field Q (rational t0).
class TOrdValuation {
  public:
    using Field = RatFunc;
    using Residue = Rat;

    explicit TOrdValuation(Rat t0) : t0_(std::move(t0)) {}

    const Rat& t0() const { return t0_; }
    std::string name() const { return "ord_{t-" + rat_str(t0_) + "}"; }

    int val(const RatFunc& x) const {
        if (is_zero(x)) return kValInf;
        return root_mult(x.num()) - root_mult(x.den());
    }

    Rat reduce(const RatFunc& x) const {
        if (is_zero(x)) return Rat(0);
        if (val(x) < 0) throw NegativeValuation("reduce: pole at t0");
        // num and den are coprime, so val >= 0 forces den(t0) != 0
        return x.num().eval(t0_) / x.den().eval(t0_);
    }

    RatFunc uniformizer_pow(int e) const {
        RatFunc u(linear(), Poly<Rat>::constant(Rat(1)));
        RatFunc acc = RatFunc::from_rat(Rat(1));
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) acc = acc * u;
        if (e < 0) return RatFunc::from_rat(Rat(1)) / acc;
        return acc;
    }

  private:
    Poly<Rat> linear() const { return Poly<Rat>{-t0_, Rat(1)}; }
    int root_mult(const Poly<Rat>& f) const {
        int k = 0;
        Poly<Rat> g = f;
        Poly<Rat> u = linear();
        while (!is_zero(g) && is_zero(g.eval(t0_))) {
            g = poly_exact_div(g, u);
            ++k;
        }
        return k;
    }
    Rat t0_;
};

/// Normalization x = pi^e * unit with val(unit) = 0.
template <class V>
std::pair<typename V::Field, int> normalize_elem(const typename V::Field& x, const V& nu) {
    if (is_zero(x)) throw InvalidInput("normalize_elem: zero input");
    int e = nu.val(x);
    return {x / nu.uniformizer_pow(e), e};
}

/// Gauss norm: min over coefficient valuations; kValInf for the zero poly.
template <class V>
int gauss_norm(const Poly<typename V::Field>& f, const V& nu) {
    int m = kValInf;
    for (const auto& c : f.coeffs()) {
        if (is_zero(c)) continue;
        m = std::min(m, nu.val(c));
    }
    return m;
}

/// Coefficientwise reduction; throws NegativeValuation naming the offender.
template <class V>
Poly<typename V::Residue> reduce_poly(const Poly<typename V::Field>& f, const V& nu) {
    std::vector<typename V::Residue> out;
    out.reserve(f.coeffs().size());
    int idx = 0;
    for (const auto& c : f.coeffs()) {
        if (!is_zero(c) && nu.val(c) < 0)
            throw NegativeValuation("reduce_poly: coefficient " + std::to_string(idx) +
                                        " has negative valuation",
                                    idx);
        out.push_back(nu.reduce(c));
        ++idx;
    }
    return Poly<typename V::Residue>(std::move(out));
}

/// pi^{-gauss_norm(f)} * f, plus the exponent; identity on the zero poly.
template <class V>
std::pair<Poly<typename V::Field>, int> normalize_poly(const Poly<typename V::Field>& f,
                                                       const V& nu) {
    if (is_zero(f)) return {f, 0};
    int e = gauss_norm(f, nu);
    return {f * nu.uniformizer_pow(-e), e};
}

}  // namespace hypcf
