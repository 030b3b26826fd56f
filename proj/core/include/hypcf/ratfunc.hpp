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

#include <optional>
#include <string>
#include <utility>

#include "hypcf/poly.hpp"
#include "hypcf/rat.hpp"

namespace hypcf {

/// Monic gcd over Q via the primitive pseudo-remainder sequence; the naive
/// rational Euclid blows up on the coefficient sizes Q(t) arithmetic feeds it.
Poly<Rat> poly_gcd_monic(const Poly<Rat>& a, const Poly<Rat>& b);

/// lcm(denominators)/gcd(numerators) scaling to coprime integer coefficients.
Poly<Rat> poly_primitive_int(const Poly<Rat>& f);

/// Element of Q(t): coprime numerator/denominator with monic denominator.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(Poly<Rat> num, Poly<Rat> den) : n_(std::move(num)), d_(std::move(den)) {
        if (is_zero(d_)) throw DivisionByZero("zero denominator in Q(t)");
        reduce();
    }
    static RatFunc from_rat(const Rat& x) {
        RatFunc r;
        r.n_ = is_zero(x) ? Poly<Rat>() : Poly<Rat>::constant(x);
        r.d_ = Poly<Rat>::constant(Rat(1));
        return r;
    }
    static RatFunc t_power(int k) {
        RatFunc r;
        r.n_ = Poly<Rat>::monomial(Rat(1), k);
        r.d_ = Poly<Rat>::constant(Rat(1));
        return r;
    }

    const Poly<Rat>& num() const { return n_; }
    const Poly<Rat>& den() const { return d_; }
    bool is_zero_elem() const { return is_zero(n_); }
    bool is_constant() const { return n_.degree() <= 0 && d_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const {
        if (is_zero_elem()) return o;
        if (o.is_zero_elem()) return *this;
        Poly<Rat> g = d_.degree() > 0 && o.d_.degree() > 0 ? poly_gcd_monic(d_, o.d_)
                                                           : Poly<Rat>::constant(Rat(1));
        if (g.degree() <= 0) return RatFunc(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
        Poly<Rat> da = poly_exact_div(d_, g), db = poly_exact_div(o.d_, g);
        return RatFunc(n_ * db + o.n_ * da, da * o.d_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const {
        if (is_zero_elem() || o.is_zero_elem()) return RatFunc();
        // cross-cancel before multiplying to keep gcd inputs small
        Poly<Rat> g1 = poly_gcd_monic(n_, o.d_);
        Poly<Rat> g2 = poly_gcd_monic(o.n_, d_);
        Poly<Rat> n1 = g1.degree() > 0 ? poly_exact_div(n_, g1) : n_;
        Poly<Rat> d2 = g1.degree() > 0 ? poly_exact_div(o.d_, g1) : o.d_;
        Poly<Rat> n2 = g2.degree() > 0 ? poly_exact_div(o.n_, g2) : o.n_;
        Poly<Rat> d1 = g2.degree() > 0 ? poly_exact_div(d_, g2) : d_;
        RatFunc r;
        r.n_ = n1 * n2;
        r.d_ = d1 * d2;
        Rat l = r.d_.lc();
        r.n_ = r.n_ / l;
        r.d_ = r.d_ / l;
        return r;
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero_elem()) throw DivisionByZero("division by zero in Q(t)");
        RatFunc inv;
        inv.n_ = o.d_;
        inv.d_ = o.n_ / o.n_.lc();
        inv.n_ = inv.n_ / o.n_.lc();
        return *this * inv;
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.n_ = -r.n_;
        return r;
    }
    bool operator==(const RatFunc& o) const { return n_ == o.n_ && d_ == o.d_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

  private:
    void reduce() {
        if (is_zero(n_)) {
            d_ = Poly<Rat>::constant(Rat(1));
            return;
        }
        Poly<Rat> g = poly_gcd_monic(n_, d_);
        if (g.degree() > 0) {
            n_ = poly_exact_div(n_, g);
            d_ = poly_exact_div(d_, g);
        }
        Rat l = d_.lc();
        n_ = n_ / l;
        d_ = d_ / l;
    }

    Poly<Rat> n_;                              // zero polynomial for 0
    Poly<Rat> d_ = Poly<Rat>::constant(Rat(1)); // monic
};

/// Exact square root in Q(t) when both parts are squares in Q[t].
std::optional<Poly<Rat>> poly_sqrt_rat(const Poly<Rat>& f);

inline std::optional<RatFunc> ratfunc_sqrt(const RatFunc& x) {
    if (x.is_zero_elem()) return RatFunc();
    auto sn = poly_sqrt_rat(x.num());
    if (!sn) return std::nullopt;
    auto sd = poly_sqrt_rat(x.den());
    if (!sd) return std::nullopt;
    return RatFunc(*sn, *sd);
}

template <>
struct FieldOps<RatFunc> {
    static bool is_zero(const RatFunc& x) { return x.is_zero_elem(); }
    static RatFunc zero(const RatFunc&) { return RatFunc(); }
    static RatFunc one(const RatFunc&) { return RatFunc::from_rat(Rat(1)); }
    static RatFunc from_int(const RatFunc&, long n) { return RatFunc::from_rat(Rat(n)); }
    static int cmp(const RatFunc& a, const RatFunc& b) {
        int c = poly_cmp(a.num(), b.num());
        if (c != 0) return c;
        return poly_cmp(a.den(), b.den());
    }
    static std::optional<RatFunc> sqrt(const RatFunc& x) { return ratfunc_sqrt(x); }
};

}  // namespace hypcf
