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

#include <climits>
#include <optional>
#include <utility>
#include <vector>

#include "hypcf/poly.hpp"
#include "hypcf/valuation.hpp"

namespace hypcf {

/// Truncated Laurent series in 1/X with an explicit correctness window.
///
/// Coefficients are stored for exponents hi() down to lo(); everything above
/// hi() is exactly zero. When exact() is set (series built from a polynomial)
/// the coefficients below lo() are exactly zero as well; otherwise they are
/// unknown and reading them raises WindowError. Arithmetic propagates the
/// largest window on which the result is provably correct.
template <class K>
class LaurentSeries {
  public:
    LaurentSeries() : hi_(0), lo_(0), exact_(true) {}  // exact zero

    static LaurentSeries from_poly(const Poly<K>& p) {
        LaurentSeries s;
        s.exact_ = true;
        if (is_zero(p)) return s;
        s.hi_ = p.degree();
        s.lo_ = 0;
        s.c_.assign(p.coeffs().rbegin(), p.coeffs().rend());
        return s;
    }

    /// coeffs listed from exponent hi downward; window [hi-coeffs.size()+1, hi]
    static LaurentSeries from_range(int hi, std::vector<K> coeffs, bool exact = false) {
        LaurentSeries s;
        s.exact_ = exact;
        s.hi_ = hi;
        s.lo_ = hi - static_cast<int>(coeffs.size()) + 1;
        s.c_ = std::move(coeffs);
        s.strip();
        return s;
    }

    bool exact() const { return exact_; }
    bool is_zero_on_window() const { return c_.empty(); }
    bool is_exact_zero() const { return c_.empty() && exact_; }
    int lo() const { return lo_; }
    int hi() const {
        if (c_.empty()) throw WindowError("hi() of zero-on-window series");
        return hi_;
    }
    /// ord_infty = -hi; +infinity (kValInf) for the exact zero series.
    int ord() const {
        if (c_.empty()) {
            if (exact_) return kValInf;
            throw WindowError("ord() unknown: series vanishes on its window");
        }
        return -hi_;
    }
    const K& leading() const {
        if (c_.empty()) throw WindowError("leading() of zero series");
        return c_.front();
    }

    K coeff(int e) const {
        if (c_.empty()) {
            if (e >= lo_ || exact_) return zero_like_hint();
            throw WindowError("coefficient below window");
        }
        return coeff_with(e, zero_like(c_.front()));
    }

    /// coeff() with an explicit zero sample (needed for window-zero series).
    K coeff_with(int e, const K& zero) const {
        if (c_.empty()) {
            if (e >= lo_ || exact_) return zero;
            throw WindowError("coefficient below window");
        }
        if (e > hi_) return zero;
        if (e >= lo_) return c_[static_cast<std::size_t>(hi_ - e)];
        if (exact_) return zero;
        throw WindowError("coefficient below window");
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    LaurentSeries operator+(const LaurentSeries& o) const {
        if (is_exact_zero()) return o;
        if (o.is_exact_zero()) return *this;
        bool ex = exact_ && o.exact_;
        if (c_.empty() && o.c_.empty()) {
            LaurentSeries r;
            r.exact_ = ex;
            r.lo_ = std::max(lo_, o.lo_);
            return r;
        }
        const K zero = zero_like(c_.empty() ? o.c_.front() : c_.front());
        int lo = ex ? std::min(low_support(), o.low_support())
                    : std::max(effective_lo(), o.effective_lo());
        int top = std::max(top_bound(), o.top_bound());
        if (top < lo) {
            LaurentSeries r;
            r.exact_ = ex;
            r.lo_ = lo;
            return r;
        }
        std::vector<K> v;
        v.reserve(static_cast<std::size_t>(top - lo + 1));
        for (int e = top; e >= lo; --e) v.push_back(coeff_with(e, zero) + o.coeff_with(e, zero));
        return from_range(top, std::move(v), ex);
    }
    LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

    LaurentSeries operator*(const LaurentSeries& o) const {
        if (is_exact_zero() || o.is_exact_zero()) return LaurentSeries();
        if (c_.empty() || o.c_.empty()) {
            // zero-on-window times bounded-top series: known zero where all
            // contributing products are known zero
            const LaurentSeries& z = c_.empty() ? *this : o;
            const LaurentSeries& b = c_.empty() ? o : *this;
            if (b.c_.empty()) throw WindowError("product of two window-zero series");
            LaurentSeries r;
            r.exact_ = false;
            r.lo_ = z.lo_ + b.hi_;
            return r;
        }
        int top = hi_ + o.hi_;
        int lo = exact_ && o.exact_ ? low_support() + o.low_support()
                                    : std::max(effective_lo() + o.hi_, o.effective_lo() + hi_);
        std::vector<K> v(static_cast<std::size_t>(top - lo + 1), zero_like(c_.front()));
        int alow = exact_ ? low_support() : lo_;
        int blow = o.exact_ ? o.low_support() : o.lo_;
        for (int i = hi_; i >= alow; --i) {
            const K& a = coeff(i);
            if (is_zero(a)) continue;
            for (int j = o.hi_; j >= blow; --j) {
                int e = i + j;
                if (e < lo) continue;
                v[static_cast<std::size_t>(top - e)] = v[static_cast<std::size_t>(top - e)] + a * o.coeff(j);
            }
        }
        return from_range(top, std::move(v), exact_ && o.exact_);
    }

    /// Multiplicative inverse; window per the quotient-coefficient recursion.
    /// loWanted extends the window when the operand is exact.
    LaurentSeries recip(std::optional<int> loWanted = std::nullopt) const {
        if (c_.empty()) throw DivisionByZero("recip of (window-)zero series");
        int hi = -hi_;
        int lo;
        if (exact_) {
            lo = loWanted.value_or(hi - (hi_ - low_support()));
        } else {
            lo = lo_ - 2 * hi_;
            if (loWanted && *loWanted > lo) lo = *loWanted;
        }
        int n = hi - lo + 1;
        std::vector<K> q(static_cast<std::size_t>(n), zero_like(c_.front()));
        const K one = one_like(c_.front());
        for (int j = 0; j < n; ++j) {
            K acc = j == 0 ? one : zero_like(one);
            for (int i = 0; i < j; ++i) {
                // coefficient of this at exponent hi_-(j-i)
                K s = coeff(hi_ - (j - i));
                if (!is_zero(s)) acc = acc - q[static_cast<std::size_t>(i)] * s;
            }
            q[static_cast<std::size_t>(j)] = acc / c_.front();
        }
        return from_range(hi, std::move(q), false);
    }

    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.recip(); }

    bool operator==(const LaurentSeries& o) const {
        return exact_ == o.exact_ && c_ == o.c_ && (c_.empty() || hi_ == o.hi_) && lo_ == o.lo_;
    }

  private:
    static constexpr int kExactLo = INT_MIN / 4;  // "known all the way down"
    int top_bound() const { return c_.empty() ? lo_ - 1 : hi_; }
    int effective_lo() const { return exact_ ? kExactLo : lo_; }
    int low_support() const {  // lowest nonzero exponent of an exact series
        if (!exact_) throw InternalError("low_support on windowed series");
        for (std::size_t i = c_.size(); i-- > 0;)
            if (!is_zero(c_[i])) return hi_ - static_cast<int>(i);
        return lo_;
    }
    K zero_like_hint() const {
        if (!c_.empty()) return zero_like(c_.front());
        throw WindowError("cannot synthesize coefficient for empty series without sample");
    }
    void strip() {
        while (!c_.empty() && is_zero(c_.front())) {
            c_.erase(c_.begin());
            --hi_;
        }
    }

    int hi_;
    int lo_;
    bool exact_;
    std::vector<K> c_;  // descending exponents hi_ .. lo_
};

/// Polynomial part: the unique a with ord(f - a) > 0.
template <class K>
Poly<K> truncate(const LaurentSeries<K>& f) {
    if (f.is_zero_on_window()) {
        if (f.exact() || f.lo() <= 0) return Poly<K>();
        throw WindowError("truncate: window does not reach exponent 0");
    }
    if (f.hi() < 0) return Poly<K>();
    if (!f.exact() && f.lo() > 0)
        throw WindowError("truncate: window does not reach exponent 0");
    std::vector<K> c(static_cast<std::size_t>(f.hi()) + 1, zero_like(f.leading()));
    for (int e = 0; e <= f.hi(); ++e) c[static_cast<std::size_t>(e)] = f.coeff(e);
    return Poly<K>(std::move(c));
}

/// Gauss norm over the stored window; exact for exact series, otherwise an
/// estimate from above that the caller must treat as such.
template <class V>
int gauss_norm(const LaurentSeries<typename V::Field>& f, const V& nu) {
    if (f.is_zero_on_window()) return kValInf;
    int m = kValInf;
    for (int e = f.hi(); e >= f.lo(); --e) {
        auto c = f.coeff(e);
        if (is_zero(c)) continue;
        m = std::min(m, nu.val(c));
    }
    return m;
}

template <class V>
LaurentSeries<typename V::Residue> reduce_series(const LaurentSeries<typename V::Field>& f,
                                                 const V& nu) {
    using R = typename V::Residue;
    if (f.is_zero_on_window()) return LaurentSeries<R>();
    std::vector<R> out;
    for (int e = f.hi(); e >= f.lo(); --e) {
        auto c = f.coeff(e);
        if (!is_zero(c) && nu.val(c) < 0)
            throw NegativeValuation("reduce_series: negative valuation at exponent " +
                                    std::to_string(e));
        out.push_back(nu.reduce(c));
    }
    return LaurentSeries<R>::from_range(f.hi(), std::move(out), f.exact());
}

/// Completion of the square: D = A^2 + Omega with deg Omega < deg A = deg D/2.
/// The branch is pinned by LC(A): the canonical square root of LC(D) unless
/// an explicit root is supplied (used when a reduction must match upstairs).
template <class K>
std::pair<Poly<K>, Poly<K>> complete_square(const Poly<K>& D,
                                            std::optional<K> forcedRoot = std::nullopt) {
    if (is_zero(D) || D.degree() % 2 != 0 || D.degree() < 0)
        throw InvalidInput("complete_square: even-degree nonzero D required");
    K root;
    if (forcedRoot) {
        root = *forcedRoot;
        if (!(root * root == D.lc())) throw InvalidInput("complete_square: forced root invalid");
    } else {
        auto r = elem_sqrt(D.lc());
        if (!r) throw InvalidInput("complete_square: leading coefficient is not a square");
        root = *r;
    }
    const K zero = zero_like(root);
    const int d = D.degree() / 2;
    std::vector<K> A(static_cast<std::size_t>(d) + 1, zero);
    A[static_cast<std::size_t>(d)] = root;
    for (int k = d - 1; k >= 0; --k) {
        K s = zero;
        for (int i = k + 1; i <= d; ++i) {
            int j = d + k - i;
            if (j > k && j <= d) s = s + A[static_cast<std::size_t>(i)] * A[static_cast<std::size_t>(j)];
        }
        K dk = D.coeff_or(d + k, zero);
        A[static_cast<std::size_t>(k)] = (dk - s) / (root + root);
    }
    Poly<K> Ap(std::move(A));
    Poly<K> Om = D - Ap * Ap;
    if (Om.degree() >= d) throw InternalError("complete_square: deg Omega >= deg A");
    return {Ap, Om};
}

/// sqrt(D) as a Laurent series, correct down to exponent loWanted.
///
/// Newton iteration S <- (S + D/S)/2 seeded with A doubles the number of
/// correct coefficients each round. Perfect squares come back exact.
template <class K>
LaurentSeries<K> sqrt_series(const Poly<K>& D, int loWanted,
                             std::optional<K> forcedRoot = std::nullopt) {
    auto [A, Om] = complete_square(D, forcedRoot);
    if (is_zero(Om)) return LaurentSeries<K>::from_poly(A);
    const int d = D.degree() / 2;
    if (loWanted > d) loWanted = d;
    const std::size_t target = static_cast<std::size_t>(d - loWanted) + 1;
    const K zero = zero_like(A.lc());
    const K two = from_int_like(A.lc(), 2);
    // descending coefficient vector of the current iterate, starting at X^d
    std::vector<K> S(A.coeffs().rbegin(), A.coeffs().rend());
    std::size_t correct = S.size();  // exponents d .. 0
    while (correct < target) {
        std::size_t k = std::min(correct * 2, target);
        S.resize(k, zero);
        // Q = D/S to k coefficients, top exponent d
        std::vector<K> Q(k, zero);
        for (std::size_t j = 0; j < k; ++j) {
            int e = 2 * d - static_cast<int>(j);
            K acc = D.coeff_or(e, zero);
            for (std::size_t i = 0; i < j; ++i) {
                std::size_t shift = j - i;
                if (shift < S.size() && !is_zero(S[shift])) acc = acc - Q[i] * S[shift];
            }
            Q[j] = acc / S[0];
        }
        for (std::size_t j = 0; j < k; ++j) S[j] = (S[j] + Q[j]) / two;
        correct = k;
    }
    S.resize(target, zero);
    return LaurentSeries<K>::from_range(d, std::move(S), false);
}

}  // namespace hypcf
