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

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hypcf/laurent.hpp"
#include "hypcf/poly.hpp"

namespace hypcf {

/// Complete quotient alpha_n = (A + t_n + sqrt(D)) / s_n of a quadratic
/// Laurent series. The whole expansion runs on the two polynomials (t_n, s_n);
/// s_n | D - (A + t_n)^2 is maintained by every step.
template <class K>
struct CFState {
    Poly<K> D;
    Poly<K> A;  // polynomial part of sqrt(D), fixed branch
    Poly<K> t;
    Poly<K> s;
    long n = 0;
};

template <class K>
bool is_sigma_reduced(const CFState<K>& st) {
    return st.t.degree() < st.s.degree() && st.s.degree() < st.A.degree();
}

namespace detail {

template <class K>
void check_sqrt_input(const Poly<K>& D) {
    if (D.degree() <= 0) throw InvalidInput("D must be nonconstant");
    if (D.degree() % 2 != 0) throw InvalidInput("deg D must be even");
}

}  // namespace detail

/// State for alpha_0 = sqrt(D): t_0 = -A, s_0 = 1.
template <class K>
CFState<K> cf_init_sqrt(const Poly<K>& D, std::optional<K> forcedRoot = std::nullopt) {
    detail::check_sqrt_input(D);
    auto [A, Om] = complete_square(D, forcedRoot);
    if (is_zero(Om)) throw SquareInput("D is a perfect square");
    CFState<K> st;
    st.D = D;
    st.A = A;
    st.t = -A;
    st.s = Poly<K>::constant(one_like(D.lc()));
    st.n = 0;
    return st;
}

/// State for alpha = (u + v*sqrt(D))/w with ord(alpha) <= 0.
///
/// When w | D - u^2 and v = 1 the triple is usable directly. Otherwise the
/// representation is rescaled twice (by v, then by the new denominator) to
/// reach (r + sqrt(D'))/s with s | D' - r^2, flipping signs if the canonical
/// branch of sqrt(D') points the other way.
template <class K>
CFState<K> cf_init_general(const Poly<K>& u, const Poly<K>& v, const Poly<K>& w,
                           const Poly<K>& D) {
    detail::check_sqrt_input(D);
    if (is_zero(v)) throw InvalidInput("v = 0: input is rational, use cf_rational");
    if (is_zero(w)) throw InvalidInput("w = 0");
    auto [A0, Om0] = complete_square(D);
    if (is_zero(Om0)) throw SquareInput("D is a perfect square");

    // ord(u + v sqrt(D)) from the conjugate product, then require ord <= 0
    {
        Poly<K> prod = u * u - v * v * D;  // (u + v sqrt D)(u - v sqrt D)
        // ord(u + v sqrt D) <= -deg(prod) + max(deg u, deg v + d)
        int ordCap = -prod.degree() + std::max(u.degree(), v.degree() + A0.degree());
        int sLo = -ordCap - std::max(v.degree(), 0) - 1;
        auto S = sqrt_series(D, sLo);
        auto numSer = LaurentSeries<K>::from_poly(u) + LaurentSeries<K>::from_poly(v) * S;
        if (numSer.is_zero_on_window())
            throw InternalError("cf_init_general: numerator vanished unexpectedly");
        if (numSer.ord() + w.degree() > 0)
            throw InvalidInput("cf_init_general: ord(alpha) > 0; expand the inverse instead");
    }

    Poly<K> r, s, Dtil;
    Poly<K> A;
    const K one = one_like(D.lc());
    bool direct = false;
    if (v == Poly<K>::constant(one)) {
        auto [q, rem] = poly_divmod(D - u * u, w);
        if (is_zero(rem)) {
            r = u;
            s = w;
            Dtil = D;
            A = A0;
            direct = true;
        }
    }
    if (!direct) {
        // alpha = (u v^2 w + v^3 w sqrt(D)) / (v^2 w^2), discriminant v^6 w^2 D
        r = u * v * v * w;
        s = v * v * w * w;
        Dtil = v * v * v * v * v * v * w * w * D;
        Poly<K> B = v * v * v * w;  // sqrt(Dtil) = +- B sqrt(D)
        auto [A1, Om1] = complete_square(Dtil);
        // canonical branch of sqrt(Dtil) vs B*sqrt(D): compare leading coeffs
        K canon = A1.lc();
        K viaB = B.lc() * A0.lc();
        if (!(canon == viaB)) {
            if (!(canon == -viaB)) throw InternalError("cf_init_general: branch mismatch");
            r = -r;
            s = -s;
        }
        A = A1;
    }
    // s | Dtil - r^2 by construction
    (void)poly_exact_div(Dtil - r * r, s);
    CFState<K> st;
    st.D = Dtil;
    st.A = A;
    st.t = r - A;
    st.s = s;
    st.n = 0;
    return st;
}

/// One continued fraction step: a_n = floor(alpha_n) by a single polynomial
/// division of 2A + t_n by s_n; remainder gives -t_{n+1}, and
/// s_{n+1} = (D - (A + t_{n+1})^2) / s_n divides exactly.
template <class K>
std::pair<Poly<K>, CFState<K>> cf_step(const CFState<K>& st) {
    const K one = one_like(st.A.lc());
    Poly<K> twoA = st.A * from_int_like(one, 2);
    auto [a, rem] = poly_divmod(twoA + st.t, st.s);
    CFState<K> next;
    next.D = st.D;
    next.A = st.A;
    next.t = -rem;
    Poly<K> rn = next.D - (st.A + next.t) * (st.A + next.t);
    next.s = poly_exact_div(rn, st.s);
    if (is_zero(next.s)) throw InternalError("cf_step: s vanished (square discriminant?)");
    next.n = st.n + 1;
    return {a, next};
}

template <class K>
struct Convergent {
    long n;
    Poly<K> p;
    Poly<K> q;
};

/// Canonical convergents from partial quotients via the two-term recursion,
/// p_{-1} = 1, q_{-1} = 0, p_0 = a_0, q_0 = 1.
template <class K>
std::vector<Convergent<K>> convergents(const std::vector<Poly<K>>& a) {
    std::vector<Convergent<K>> out;
    if (a.empty()) return out;
    const K* sample = nullptr;
    for (const auto& ai : a)
        if (!is_zero(ai)) {
            sample = &ai.lc();
            break;
        }
    if (!sample) throw InvalidInput("convergents: all partial quotients zero");
    const K one = one_like(*sample);
    Poly<K> pm1 = Poly<K>::constant(one), qm1;  // n = -1
    Poly<K> p = a[0], q = Poly<K>::constant(one);
    out.push_back({0, p, q});
    for (std::size_t i = 1; i < a.size(); ++i) {
        Poly<K> pn = a[i] * p + pm1;
        Poly<K> qn = a[i] * q + qm1;
        pm1 = std::move(p);
        qm1 = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
        out.push_back({static_cast<long>(i), p, q});
    }
    return out;
}

enum class PeriodStatus { Found, NotFoundWithin };

/// Quasi-period/period data. alpha_n = mu^{(-1)^n} alpha_{n+ell} from the
/// preperiod on; L = ell when mu = 1, else 2*ell.
template <class K>
struct PeriodReport {
    PeriodStatus status = PeriodStatus::NotFoundWithin;
    int quasiPeriod = 0;                 // ell
    int period = 0;                      // L
    K mu;
    int preperiod = 0;                   // first index of the pure quasi-periodic tail
    long stepsUsed = 0;
};

/// Scan the expansion and detect the quasi-period by state repetition.
///
/// Sigma-reduced states are keyed on (t, s/LC(s)); a hit at distance ell from
/// the stored index pins alpha_n = mu^{(-1)^n} alpha_{n+ell} with mu read off
/// the leading coefficients of s. Over F_p this always terminates; over Q or
/// Q(t) running out of steps proves nothing.
template <class K>
PeriodReport<K> detect_period(const CFState<K>& start, long maxSteps) {
    using Key = std::pair<std::vector<K>, std::vector<K>>;
    struct KeyCmp {
        bool operator()(const Key& a, const Key& b) const {
            if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
            for (std::size_t i = 0; i < a.first.size(); ++i) {
                int c = cmp_elems(a.first[i], b.first[i]);
                if (c != 0) return c < 0;
            }
            if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
            for (std::size_t i = 0; i < a.second.size(); ++i) {
                int c = cmp_elems(a.second[i], b.second[i]);
                if (c != 0) return c < 0;
            }
            return false;
        }
    };
    std::map<Key, std::pair<long, K>, KeyCmp> seen;  // key -> (index, LC(s))

    PeriodReport<K> rep;
    CFState<K> st = start;
    std::optional<long> firstReduced;
    for (long step = 0; step <= maxSteps; ++step) {
        if (is_sigma_reduced(st)) {
            if (!firstReduced) firstReduced = st.n;
            Key key{st.t.coeffs(), (st.s / st.s.lc()).coeffs()};
            auto it = seen.find(key);
            if (it != seen.end()) {
                long n0 = it->second.first;
                rep.status = PeriodStatus::Found;
                rep.quasiPeriod = static_cast<int>(st.n - n0);
                // alpha_{n0}/alpha_{n0+ell} = s_{n0+ell}/s_{n0} = mu^{(-1)^{n0}}
                K ratio = st.s.lc() / it->second.second;
                rep.mu = (n0 % 2 == 0) ? ratio : one_like(ratio) / ratio;
                rep.period = (rep.mu == one_like(rep.mu)) ? rep.quasiPeriod : 2 * rep.quasiPeriod;
                rep.preperiod = static_cast<int>(*firstReduced);
                rep.stepsUsed = step;
                return rep;
            }
            seen.emplace(std::move(key), std::make_pair(st.n, st.s.lc()));
        }
        st = cf_step(st).second;
    }
    rep.stepsUsed = maxSteps;
    return rep;
}

template <class K>
PeriodReport<K> detect_period_sqrt(const Poly<K>& D, long maxSteps) {
    return detect_period(cf_init_sqrt(D), maxSteps);
}

/// Finite continued fraction of p/q (the Euclidean algorithm).
template <class K>
std::vector<Poly<K>> cf_rational(const Poly<K>& p, const Poly<K>& q) {
    if (is_zero(q)) throw DivisionByZero("cf_rational: q = 0");
    std::vector<Poly<K>> out;
    Poly<K> r0 = p, r1 = q;
    while (!is_zero(r1)) {
        auto [a, r2] = poly_divmod(r0, r1);
        out.push_back(a);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return out;
}

/// Evaluate [a_0, ..., a_n] back to a fraction (test helper).
template <class K>
std::pair<Poly<K>, Poly<K>> cf_eval(const std::vector<Poly<K>>& a) {
    auto cv = convergents(a);
    if (cv.empty()) throw InvalidInput("cf_eval: empty continued fraction");
    return {cv.back().p, cv.back().q};
}

/// mu * [a0, a1, a2, ...] = [mu a0, a1/mu, mu a2, ...].
template <class K>
std::vector<Poly<K>> scale_cf(const std::vector<Poly<K>>& a, const K& mu) {
    if (is_zero(mu)) throw InvalidInput("scale_cf: mu = 0");
    std::vector<Poly<K>> out;
    out.reserve(a.size());
    K inv = one_like(mu) / mu;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * (i % 2 == 0 ? mu : inv));
    return out;
}

/// Palindromy of the quasi-period of CF(A + sqrt(D)) = [2A, a_1, ..., a_ell, ...]:
/// checks b_k = mu^{(-1)^k} b_{ell-k} across the quasi-period, where b_0 = 2A
/// and b_k = a_k otherwise.
template <class K>
bool palindrome_check(const PeriodReport<K>& rep, const Poly<K>& A,
                      const std::vector<Poly<K>>& a) {
    if (rep.status != PeriodStatus::Found) throw InvalidInput("palindrome_check: no period");
    int ell = rep.quasiPeriod;
    if (static_cast<int>(a.size()) <= ell) throw InvalidInput("palindrome_check: need a_0..a_ell");
    const K& mu = rep.mu;
    K inv = one_like(mu) / mu;
    auto b = [&](int k) -> Poly<K> {
        return k == 0 ? A * from_int_like(mu, 2) : a[static_cast<std::size_t>(k)];
    };
    for (int k = 0; k <= ell / 2; ++k) {
        Poly<K> lhs = b(k);
        Poly<K> rhs = b(ell - k) * (k % 2 == 0 ? mu : inv);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

/// Naive count of sigma-reduced (t, s) pairs over F_q: (q^{2d} - 1)/(q + 1).
/// Saturates at cap to stay usable as a step bound.
inline long sigma_reduced_bound(std::uint64_t q, int degD, long cap = 100000000L) {
    long double b = 0;
    long double qf = static_cast<long double>(q);
    long double pw = 1;
    for (int i = 0; i < degD; ++i) {
        pw *= qf;
        if (pw > static_cast<long double>(cap) * (qf + 1)) return cap;
    }
    b = (pw - 1) / (qf + 1);
    return b > static_cast<long double>(cap) ? cap : static_cast<long>(b) + 1;
}

}  // namespace hypcf
