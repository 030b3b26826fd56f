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
#include <vector>

#include <type_traits>

#include "hypcf/cf.hpp"
#include "hypcf/laurent.hpp"
#include "hypcf/useries.hpp"
#include "hypcf/valuation.hpp"

namespace hypcf {

enum class DReduction { Square, NonSquare, Unsupported };

/// Classification of D mod nu: Square iff nu(D) >= 0, nu(LC D) = 0 and
/// nu(D - A^2) > 0. Total: never throws.
template <class V>
DReduction reduce_D_classify(const Poly<typename V::Field>& D, const V& nu,
                             std::string* reason = nullptr) {
    auto say = [&](const std::string& s) {
        if (reason) *reason = s;
    };
    if (is_zero(D) || D.degree() % 2 != 0) {
        say("deg D must be positive even");
        return DReduction::Unsupported;
    }
    if (!elem_sqrt(D.lc())) {
        say("LC(D) is not a square");
        return DReduction::Unsupported;
    }
    if (gauss_norm(D, nu) < 0) {
        say("nu(D) < 0");
        return DReduction::Unsupported;
    }
    if (nu.val(D.lc()) > 0) {
        say("nu(LC D) > 0");
        return DReduction::Unsupported;
    }
    auto [A, Om] = complete_square(D);
    if (is_zero(Om) || gauss_norm(Om, nu) > 0) {
        say("D reduces to a square");
        return DReduction::Square;
    }
    return DReduction::NonSquare;
}

struct Classification {
    bool good = false;
    long badAt = -1;       // first n with nu(a_n) < 0 or nu(LC a_n) > 0
    long scanned = 0;      // rows examined
    bool conclusive = false;  // a full quasi-period was covered
};

/// Scan CF(sqrt(D)) for good reduction at nu through N steps. For periodic
/// expansions one quasi-period decides everything, which the conclusive flag
/// reports.
template <class V>
Classification classify_reduction(const Poly<typename V::Field>& D, const V& nu, long N) {
    using K = typename V::Field;
    std::string why;
    auto cls = reduce_D_classify(D, nu, &why);
    if (cls == DReduction::Unsupported)
        throw InvalidInput("classify_reduction: " + why);
    Classification out;
    if (cls == DReduction::Square) {
        out.good = false;
        out.badAt = 1;
        out.scanned = 1;
        out.conclusive = true;
        return out;
    }
    auto rep = detect_period_sqrt(D, N);
    long horizon = N;
    if (rep.status == PeriodStatus::Found)
        horizon = std::min<long>(N, rep.preperiod + rep.quasiPeriod);
    CFState<K> st = cf_init_sqrt(D);
    for (long n = 0; n <= horizon; ++n) {
        auto [a, next] = cf_step(st);
        if (gauss_norm(a, nu) < 0 || nu.val(a.lc()) != 0) {
            out.good = false;
            out.badAt = n;
            out.scanned = n;
            out.conclusive = true;
            return out;
        }
        st = next;
    }
    out.good = true;
    out.scanned = horizon;
    out.conclusive = rep.status == PeriodStatus::Found;
    return out;
}

/// Specialization fast path: run the scan in Q[u]/(u^K), u = t - t0. Good
/// reduction through n is exactly "LC(s_j) a unit for j <= n", and the unit
/// test is exact in truncated arithmetic; the generic scan over Q(t) grinds
/// through quadratically growing rational functions instead. Periodicity is
/// only probed via truncated state collisions and then certified exactly, so
/// the conclusive flag never lies.
inline Classification classify_reduction(const Poly<RatFunc>& D, const TOrdValuation& nu,
                                         long N) {
    std::string why;
    auto cls = reduce_D_classify(D, nu, &why);
    if (cls == DReduction::Unsupported) throw InvalidInput("classify_reduction: " + why);
    Classification out;
    if (cls == DReduction::Square) {
        out.badAt = 1;
        out.scanned = 1;
        out.conclusive = true;
        return out;
    }
    constexpr std::size_t K = 6;
    const USeries u = USeries::uniformizer(K);
    // expand each coefficient of D at t = t0 + u
    auto lift_poly_t = [&](const Poly<Rat>& f) {
        USeries acc = USeries::constant(Rat(0), K);
        for (int i = f.degree(); i >= 0; --i)
            acc = acc * (USeries::constant(nu.t0(), K) + u) +
                  USeries::constant(f.coeff_or(i, Rat(0)), K);
        return acc;
    };
    std::vector<USeries> dc;
    for (const auto& c : D.coeffs()) dc.push_back(lift_poly_t(c.num()) / lift_poly_t(c.den()));
    Poly<USeries> Du(std::move(dc));

    CFState<USeries> st = cf_init_sqrt(Du);
    using Key = std::pair<std::vector<USeries>, std::vector<USeries>>;
    std::vector<std::pair<Key, long>> seen;
    std::optional<std::pair<long, long>> candidate;  // (n0, ell)
    for (long n = 0; n <= N; ++n) {
        if (n > 0 && !st.s.lc().is_unit()) {
            out.badAt = n;
            out.scanned = n;
            out.conclusive = true;
            return out;
        }
        if (!candidate && is_sigma_reduced(st)) {
            Key key{st.t.coeffs(), (st.s / st.s.lc()).coeffs()};
            for (const auto& [k, n0] : seen)
                if (k.first.size() == key.first.size() && k.second.size() == key.second.size()) {
                    bool eq = true;
                    for (std::size_t i = 0; eq && i < k.first.size(); ++i)
                        eq = k.first[i] == key.first[i];
                    for (std::size_t i = 0; eq && i < k.second.size(); ++i)
                        eq = k.second[i] == key.second[i];
                    if (eq) {
                        candidate = {n0, st.n - n0};
                        break;
                    }
                }
            if (!candidate) seen.emplace_back(std::move(key), st.n);
        }
        st = cf_step(st).second;
    }
    out.good = true;
    out.scanned = N;
    // certify a collision candidate with exact arithmetic when cheap
    if (candidate && candidate->first + candidate->second <= 16) {
        auto rep = detect_period(cf_init_sqrt(D), candidate->first + candidate->second + 1);
        if (rep.status == PeriodStatus::Found &&
            rep.preperiod + rep.quasiPeriod <= out.scanned)
            out.conclusive = true;
    }
    return out;
}

template <class K>
struct NormalizedConvergent {
    long n = 0;
    Poly<K> pHat;
    Poly<K> qHat;
    int e = 0;            // nu(q_n), exponent of the normalization factor
    int thetaLCVal = 0;   // nu(LC theta_n), theta_n = pHat - alpha qHat
};

/// nu(alpha_n) as reported in a valuation table.
struct NuAlpha {
    enum class Kind { Exact, MinusInf, WindowEstimate };
    Kind kind = Kind::Exact;
    int value = 0;

    static NuAlpha exact(int v) { return {Kind::Exact, v}; }
    static NuAlpha minus_inf() { return {Kind::MinusInf, 0}; }
    static NuAlpha estimate(int v) { return {Kind::WindowEstimate, v}; }
    bool operator==(const NuAlpha&) const = default;
};

struct ValuationRow {
    long n = 0;
    long lambda = 0;
    NuAlpha nuAlpha;
    int nuA = 0;
    int nuLCA = 0;
    int nuQ = 0;
    int nuLCQ = 0;
};

struct DegreeRow {
    long n = 0;
    long m = 0;
    int degA = 0;
    int degC = 0;
    int degQ = 0;
    int degQred = 0;
    int degV = 0;
};

struct LambdaEntry {
    long n = 0;
    long lambda = 0;
    int degH = 0;  // deg of the cofactor h_n
};

struct Genus1Pattern {
    int ell = 0;
    std::vector<long> unboundedSet;      // indices j(ell+1)-1 within horizon
    std::vector<int> f;                  // f_n = nu(LC theta_{n-1}), f_0 = 0
    std::vector<int> F;                  // F_0 = 0, F_n = -(F_{n-1} + f_n)
    bool formulasMatch = false;
    bool linearBoundsHold = false;       // only meaningful for odd ell
    std::vector<std::string> mismatches;
};

/// Everything the reduction of CF(sqrt(D)) at nu produces at finite horizon:
/// normalized convergents, the lambda map with its fibres, theta leading
/// valuations and the two table shapes.
template <class V>
class ReductionAnalysis {
  public:
    using K = typename V::Field;
    using R = typename V::Residue;

    ReductionAnalysis(Poly<K> D, V nu, long N, std::optional<int> window = std::nullopt)
        : D_(std::move(D)), nu_(std::move(nu)), N_(N) {
        std::string why;
        auto cls = reduce_D_classify(D_, nu_, &why);
        if (cls != DReduction::NonSquare)
            throw InvalidInput("reduction analysis needs a non-square reduction: " + why);
        window_ = window.value_or(2 * D_.degree() + 2 * static_cast<int>(N) + 8);
        build();
    }

    const std::vector<ValuationRow>& rows() const { return rows_; }
    const std::vector<DegreeRow>& degree_rows() const { return degRows_; }
    const std::vector<LambdaEntry>& lambda_entries() const { return lamEntries_; }
    const std::vector<NormalizedConvergent<K>>& normalized_convergents() const { return ncs_; }
    int window() const { return window_; }
    long lambda(long n) const { return lam_[static_cast<std::size_t>(n)]; }
    /// f_{n} = nu(LC theta_{n-1}) for n >= 1
    int f(long n) const { return f_[static_cast<std::size_t>(n)]; }

    /// Valuation patterns for deg D = 4 against the measured table.
    Genus1Pattern genus1_pattern() const {
        if (D_.degree() != 4) throw InvalidInput("genus1_pattern: deg D must be 4");
        Genus1Pattern g;
        g.ell = residueQuasiPeriod_;
        if (g.ell <= 0) throw InvalidInput("genus1_pattern: residue expansion not periodic");
        long M = static_cast<long>(rows_.size()) - 1;
        for (long j = 1; j * (g.ell + 1) - 1 <= M; ++j)
            g.unboundedSet.push_back(j * (g.ell + 1) - 1);
        g.f.assign(static_cast<std::size_t>(M) + 1, 0);
        g.F.assign(static_cast<std::size_t>(M) + 1, 0);
        for (long n = 1; n <= M; ++n) {
            g.f[static_cast<std::size_t>(n)] = f_[static_cast<std::size_t>(n)];
            g.F[static_cast<std::size_t>(n)] =
                -(g.F[static_cast<std::size_t>(n - 1)] + g.f[static_cast<std::size_t>(n)]);
        }
        auto inU = [&](long n) {
            return n >= 1 && (n + 1) % (g.ell + 1) == 0;
        };
        g.formulasMatch = true;
        auto complain = [&](long n, const std::string& what) {
            g.formulasMatch = false;
            g.mismatches.push_back("n=" + std::to_string(n) + ": " + what);
        };
        for (long n = 0; n <= M; ++n) {
            int fn = g.f[static_cast<std::size_t>(n)];
            if ((fn > 0) != inU(n)) complain(n, "f_n sign pattern");
            if (n < 2) continue;
            const auto& row = rows_[static_cast<std::size_t>(n)];
            int Fn = g.F[static_cast<std::size_t>(n)];
            int Fn2 = g.F[static_cast<std::size_t>(n - 2)];
            int fn1 = g.f[static_cast<std::size_t>(n - 1)];
            if (row.nuA != 2 * (Fn2 + Fn)) complain(n, "nu(a_n)");
            if (row.nuLCA != 2 * (Fn2 + Fn) + fn1 + fn) complain(n, "nu(LC a_n)");
            if (row.nuQ != 2 * Fn) complain(n, "nu(q_n)");
            if (row.nuLCQ != 2 * Fn + fn) complain(n, "nu(LC q_n)");
            if (inU(n)) {
                if (row.nuAlpha.kind != NuAlpha::Kind::MinusInf) complain(n, "nu(alpha_n) != -inf");
            } else if (row.nuAlpha.kind != NuAlpha::Kind::Exact) {
                complain(n, "nu(alpha_n) not exact");
            }
        }
        if (g.ell % 2 == 1) {
            g.linearBoundsHold = true;
            for (long n = 0; n <= M; ++n) {
                const auto& row = rows_[static_cast<std::size_t>(n)];
                long s = (n % 2 == 0) ? 1 : -1;
                long lhsA = s * row.nuA;
                long lhsQ = s * row.nuQ;
                auto fl = [](long a, long b) {  // floor for a >= -b
                    return a >= 0 ? a / b : -((-a + b - 1) / b);
                };
                long bA = 2 * (fl(n - 1, g.ell + 1) + fl(n + 1, g.ell + 1));
                long bQ = 2 * fl(n + 1, g.ell + 1);
                if (lhsA < bA || lhsQ < bQ) {
                    g.linearBoundsHold = false;
                    g.mismatches.push_back("linear bound fails at n=" + std::to_string(n));
                }
            }
        }
        return g;
    }

    int residue_quasi_period() const { return residueQuasiPeriod_; }

  private:
    void build() {
        const int d = D_.degree() / 2;
        auto [A, Om] = complete_square(D_);
        A_ = A;
        // CF over K through N_+1 steps
        CFState<K> st = cf_init_sqrt(D_);
        std::vector<Poly<K>> a;
        std::vector<std::pair<Poly<K>, Poly<K>>> ts;
        for (long n = 0; n <= N_ + 1; ++n) {
            ts.emplace_back(st.t, st.s);
            auto [an, nx] = cf_step(st);
            a.push_back(an);
            st = nx;
        }
        ts.emplace_back(st.t, st.s);  // s_{N+2} for the theta identity at N+1
        auto cv = convergents(a);

        // normalization exponents e_n = nu(q_n); e_{-1} = 0 by convention
        std::vector<int> e(a.size());
        for (std::size_t n = 0; n < a.size(); ++n) e[n] = gauss_norm(cv[n].q, nu_);
        auto eAt = [&](long n) { return n < 0 ? 0 : e[static_cast<std::size_t>(n)]; };

        // residue expansion gamma = sqrt(reduce D), branch matched upstairs
        Poly<R> Dp = reduce_poly(D_, nu_);
        R rootDown = nu_.reduce(A_.lc());
        CFState<R> rst = cf_init_sqrt(Dp, std::optional<R>(rootDown));
        std::vector<Poly<R>> c;
        std::vector<Convergent<R>> uv;
        Poly<R> um1 = Poly<R>::constant(one_like(rootDown)), vm1;  // index -1
        auto extend_residue = [&](int needDegV) {
            while (uv.empty() || uv.back().q.degree() <= needDegV) {
                auto [cm, nx] = cf_step(rst);
                c.push_back(cm);
                rst = nx;
                if (uv.empty()) {
                    uv.push_back({0, cm, Poly<R>::constant(one_like(rootDown))});
                } else if (uv.size() == 1) {
                    uv.push_back({1, cm * uv[0].p + um1, cm * uv[0].q + vm1});
                } else {
                    auto& pm = uv[uv.size() - 1];
                    auto& pm2 = uv[uv.size() - 2];
                    uv.push_back({static_cast<long>(uv.size()), cm * pm.p + pm2.p,
                                  cm * pm.q + pm2.q});
                }
            }
        };

        // residue quasi-period (used by genus1 and the table header metadata)
        {
            auto rep = detect_period(cf_init_sqrt(Dp, std::optional<R>(rootDown)),
                                     residue_period_cap());
            residueQuasiPeriod_ = rep.status == PeriodStatus::Found ? rep.quasiPeriod : -1;
        }

        // lambda via cross-multiplication against residue convergents
        std::vector<long> lam(a.size());
        std::vector<int> degQred(a.size());
        long m = 0;
        for (std::size_t n = 0; n < a.size(); ++n) {
            Poly<K> ph = cv[n].p * nu_.uniformizer_pow(-e[n]);
            Poly<K> qh = cv[n].q * nu_.uniformizer_pow(-e[n]);
            Poly<R> phr = reduce_poly(ph, nu_);
            Poly<R> qhr = reduce_poly(qh, nu_);
            degQred[n] = qhr.degree();
            extend_residue(qhr.degree());
            bool found = false;
            for (; m < static_cast<long>(uv.size()); ++m) {
                const auto& um = uv[static_cast<std::size_t>(m)];
                if (is_zero(phr * um.q - qhr * um.p)) {
                    found = true;
                    break;
                }
                if (um.q.degree() > qhr.degree()) break;
            }
            if (!found)
                throw InternalError("compute_lambda: no residue convergent matches index " +
                                    std::to_string(n));
            lam[n] = m;
            ncs_.push_back({static_cast<long>(n), ph, qh, e[n], 0});
            lamEntries_.push_back({static_cast<long>(n), m,
                                   qhr.degree() - uv[static_cast<std::size_t>(m)].q.degree()});
        }
        lam_ = lam;
        validate_lambda(degQred, uv);

        // theta leading valuations via theta_n sigma(theta_n) = pi^{-2 e_n} (-1)^{n+1} s_{n+1}
        // and LC(sigma theta_n) = LC(pHat_n) + LC(sqrt D) LC(qHat_n)
        f_.assign(a.size() + 1, 0);
        for (std::size_t n = 0; n + 1 < a.size() + 1; ++n) {
            const Poly<K>& sn1 = ts[n + 1].second;
            int lcS = nu_.val(sn1.lc());
            K lcSigma = ncs_[n].pHat.lc() + A_.lc() * ncs_[n].qHat.lc();
            int v = lcS - 2 * e[n] - nu_.val(lcSigma);
            if (v < 0) throw InternalError("nu(LC theta) < 0");
            f_[n + 1] = v;
            ncs_[n].thetaLCVal = v;
        }

        // fibre shape helpers
        auto isMin = [&](long j) { return j == 0 || lam[static_cast<std::size_t>(j)] != lam[static_cast<std::size_t>(j - 1)]; };
        auto isMax = [&](long j) {
            return j + 1 >= static_cast<long>(lam.size()) ||
                   lam[static_cast<std::size_t>(j + 1)] != lam[static_cast<std::size_t>(j)];
        };

        // tables
        for (long n = 0; n <= N_; ++n) {
            ValuationRow row;
            row.n = n;
            row.lambda = lam[static_cast<std::size_t>(n)];
            row.nuA = gauss_norm(a[static_cast<std::size_t>(n)], nu_);
            row.nuLCA = nu_.val(a[static_cast<std::size_t>(n)].lc());
            row.nuQ = n == 0 ? 0 : gauss_norm(cv[static_cast<std::size_t>(n)].q, nu_);
            row.nuLCQ = n == 0 ? 0 : nu_.val(cv[static_cast<std::size_t>(n)].q.lc());
            if (n == 0) {
                row.nuAlpha = NuAlpha::exact(0);
            } else {
                long j = n - 1;
                bool mn = isMin(j), mx = isMax(j);
                if (mx) {
                    // alpha_{j+1} bounded with nu = e_{j-1} - e_j (single and
                    // fibre-maximal cases alike)
                    row.nuAlpha = NuAlpha::exact(eAt(j - 1) - eAt(j));
                } else if (mn) {
                    if (f_[static_cast<std::size_t>(j + 1)] <= 0)
                        throw InternalError("missing unboundedness certificate at fibre start");
                    row.nuAlpha = NuAlpha::minus_inf();
                } else {
                    row.nuAlpha = NuAlpha::estimate(alpha_window_estimate(ts, n, d));
                }
            }
            rows_.push_back(row);

            DegreeRow dr;
            dr.n = n;
            dr.m = lam[static_cast<std::size_t>(n)];
            dr.degA = a[static_cast<std::size_t>(n)].degree();
            dr.degC = c[static_cast<std::size_t>(dr.m)].degree();
            dr.degQ = n == 0 ? 0 : cv[static_cast<std::size_t>(n)].q.degree();
            dr.degQred = n == 0 ? 0 : degQred[static_cast<std::size_t>(n)];
            dr.degV = uv[static_cast<std::size_t>(dr.m)].q.degree();
            degRows_.push_back(dr);
        }
    }

    long residue_period_cap() const {
        if constexpr (std::is_same_v<V, PAdicValuation>) {
            return sigma_reduced_bound(nu_.prime(), D_.degree()) + 2;
        } else {
            return 4 * N_ + 64;
        }
    }

    /// Window estimate of nu(alpha_n) from the exact series
    /// (A + t_n + sqrt(D)) / s_n on `window_` coefficients.
    int alpha_window_estimate(const std::vector<std::pair<Poly<K>, Poly<K>>>& ts, long n,
                              int d) const {
        if (!sqrtSeries_) sqrtSeries_ = sqrt_series(D_, d - window_ + 1);
        const auto& S = *sqrtSeries_;
        const Poly<K>& t = ts[static_cast<std::size_t>(n)].first;
        const Poly<K>& s = ts[static_cast<std::size_t>(n)].second;
        auto num = LaurentSeries<K>::from_poly(A_ + t) + S;
        auto sInv = LaurentSeries<K>::from_poly(s).recip(S.lo() - s.degree() - d - 1);
        auto alpha = num * sInv;
        return gauss_norm(alpha, nu_);
    }

    void validate_lambda(const std::vector<int>& degQred, const std::vector<Convergent<R>>& uv) {
        for (std::size_t n = 1; n < lam_.size(); ++n) {
            if (lam_[n] < lam_[n - 1]) throw InternalError("lambda not non-decreasing");
            if (lam_[n] > lam_[n - 1] + 1) throw InternalError("lambda has a gap");
        }
        for (std::size_t n = 0; n < lam_.size(); ++n) {
            bool minimal = n == 0 || lam_[n] != lam_[n - 1];
            if (minimal) {
                if (degQred[n] != uv[static_cast<std::size_t>(lam_[n])].q.degree())
                    throw InternalError("minimal fibre element: deg v != deg qHat");
                if (ncs_[n].qHat.degree() != degQred[n])
                    throw InternalError("minimal fibre element: reduction dropped deg q");
            }
        }
    }

    Poly<K> D_;
    V nu_;
    long N_;
    int window_ = 0;
    Poly<K> A_;
    int residueQuasiPeriod_ = -1;
    std::vector<long> lam_;
    std::vector<int> f_;
    std::vector<ValuationRow> rows_;
    std::vector<DegreeRow> degRows_;
    std::vector<LambdaEntry> lamEntries_;
    std::vector<NormalizedConvergent<K>> ncs_;
    mutable std::optional<LaurentSeries<K>> sqrtSeries_;
};

/// deg D = 2: closed-form expansion data for D = (X+b)^2 + omega.
template <class V>
struct Deg2Report {
    using K = typename V::Field;
    K b;
    K omega;
    int nuOmega = 0;
    Poly<K> a0;       // X + b
    Poly<K> aEven;    // 2(X + b)
    Poly<K> aOdd;     // 2(X + b)/omega

    int nu_a(long n) const { return n == 0 ? 0 : (n % 2 == 1 ? -nuOmega : 0); }
    int nu_q(long n) const { return -static_cast<int>((n + 1) / 2) * nuOmega; }
};

template <class V>
Deg2Report<V> deg2_closed_form(const Poly<typename V::Field>& D, const V& nu) {
    using K = typename V::Field;
    if (D.degree() != 2) throw InvalidInput("deg2_closed_form: deg D must be 2");
    auto [A, Om] = complete_square(D);
    if (is_zero(Om)) throw SquareInput("deg2_closed_form: D is a square");
    if (Om.degree() != 0) throw InternalError("deg2_closed_form: Omega not constant");
    Deg2Report<V> r;
    r.b = A.coeff_or(0, zero_like(A.lc())) / A.lc();
    r.omega = Om.lc();
    r.nuOmega = nu.val(r.omega);
    r.a0 = A;
    r.aEven = A * from_int_like(r.omega, 2);
    r.aOdd = r.aEven / r.omega;
    return r;
}

}  // namespace hypcf
