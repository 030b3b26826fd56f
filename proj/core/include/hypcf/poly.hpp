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

#include <algorithm>
#include <climits>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hypcf/errors.hpp"
#include "hypcf/field.hpp"

namespace hypcf {

/// deg 0 = -infinity, represented by a large negative sentinel so that
/// comparisons against any true degree stay correct.
inline constexpr int kNegInfDeg = INT_MIN / 2;

/// Dense univariate polynomial over an exact field K.
///
/// Coefficients ascend by degree; the representation is always trimmed, so
/// lc() is nonzero unless the polynomial is zero. The polynomials here stay
/// low-degree while their coefficients grow huge, hence dense storage.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const K& k) { return Poly(std::vector<K>{k}); }
    /// c * X^k
    static Poly monomial(const K& coeff, int k) {
        if (is_zero(coeff)) return Poly();
        std::vector<K> v(static_cast<std::size_t>(k) + 1, zero_like(coeff));
        v.back() = coeff;
        return Poly(std::move(v));
    }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
    const K& lc() const {
        if (c_.empty()) throw InvalidInput("lc() of zero polynomial");
        return c_.back();
    }
    /// Coefficient of X^i; sample needed only out of range.
    K coeff_or(int i, const K& zero) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly operator+(const Poly& o) const {
        const auto& a = c_;
        const auto& b = o.c_;
        if (a.empty()) return o;
        if (b.empty()) return *this;
        std::vector<K> r(std::max(a.size(), b.size()), zero_like(a.empty() ? b[0] : a[0]));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (c_.empty() || o.c_.empty()) return Poly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly operator*(const K& k) const {
        if (is_zero(k)) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x = x * k;
        r.trim();
        return r;
    }
    Poly operator/(const K& k) const {
        Poly r = *this;
        for (auto& x : r.c_) x = x / k;
        return r;
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    K eval(const K& x) const {
        if (c_.empty()) return zero_like(x);
        K acc = c_.back();
        for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, zero_like(c_[0]));
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * from_int_like(c_[i], static_cast<long>(i));
        return Poly(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
    return p.is_zero_poly();
}

/// Euclidean division: a = q*b + r, deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    if (is_zero(b)) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<K>(), a};
    const K zero = zero_like(b.lc());
    std::vector<K> r(a.coeffs());
    std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, zero);
    const auto& bc = b.coeffs();
    int db = b.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (is_zero(r[static_cast<std::size_t>(i)])) continue;
        K f = r[static_cast<std::size_t>(i)] / b.lc();
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] =
                r[static_cast<std::size_t>(i - db + j)] - f * bc[static_cast<std::size_t>(j)];
    }
    return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

/// Division that must be exact; a nonzero remainder signals corrupted state.
template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!is_zero(r)) throw InternalError("expected exact polynomial division");
    return q;
}

template <class K>
Poly<K> poly_gcd_monic(Poly<K> a, Poly<K> b) {
    while (!is_zero(b)) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (is_zero(a)) return a;
    return a / a.lc();
}

template <class K>
bool poly_is_squarefree(const Poly<K>& f) {
    if (f.degree() <= 1) return true;
    return poly_gcd_monic(f, f.derivative()).degree() == 0;
}

/// Lexicographic-by-degree total order on coefficient vectors (map keys).
template <class K>
int poly_cmp(const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = ac.size(); i-- > 0;) {
        int c = cmp_elems(ac[i], bc[i]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace hypcf
