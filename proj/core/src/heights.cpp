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

#include "hypcf/heights.hpp"

#include <cmath>

#include "hypcf/cf.hpp"
#include "hypcf/laurent.hpp"

namespace hypcf {

namespace {

/// max_i |f_i|_infty as a rational (exact), for the archimedean place.
Rat arch_max_abs(const Poly<Rat>& f) {
    Rat best(0);
    for (const auto& c : f.coeffs()) {
        Rat a = abs(c);
        if (a > best) best = a;
    }
    return best;
}

/// The finite places contribute -log of the normalized content:
/// prod_p max_i |f_i|_p = den(g)/num(g) with g = gcd(numerators)/lcm(dens).
Rat content(const Poly<Rat>& f) {
    Int l(1);
    for (const auto& c : f.coeffs())
        if (!is_zero(c)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Int g(0);
    for (const auto& c : f.coeffs()) {
        if (is_zero(c)) continue;
        Int scaled = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat r(g, l);
    r.canonicalize();
    return r;
}

double log2d_factor(const Poly<Rat>& D) {
    int twod = D.degree();
    return std::log(4.0) + 2.0 * std::log(static_cast<double>(twod)) + proj_height(D);
}

}  // namespace

double rat_height(const Rat& x) {
    if (is_zero(x)) return 0.0;
    return std::max(log_int(x.get_num()), log_int(x.get_den()));
}

double proj_height(const Poly<Rat>& f) {
    if (is_zero(f)) throw InvalidInput("proj_height of zero polynomial");
    Rat g = content(f);
    // finite places: log(den g) - log|num g|; archimedean: log max|f_i|
    double finite = log_int(g.get_den()) - log_int(g.get_num());
    return finite + log_rat_abs(arch_max_abs(f));
}

double aff_height(const Poly<Rat>& f) {
    if (is_zero(f)) return 0.0;
    // height of (1 : f_0 : ... : f_n): append coordinate 1
    std::vector<Rat> c = f.coeffs();
    c.push_back(Rat(1));
    return proj_height(Poly<Rat>(std::move(c)));
}

bool sqrt_coeff_bound_check(const Poly<Rat>& D, int n) {
    const int d = D.degree() / 2;
    auto S = sqrt_series(D, d - n - 1);
    Rat wn = S.coeff(d - n);
    double lhs = rat_height(wn);
    double rhs = 0.5 * rat_height(D.lc()) + n * log2d_factor(D);
    return lhs <= rhs + 1e-9;
}

std::vector<HeightReport> convergent_height_report(const Poly<Rat>& D, int M) {
    const int d = D.degree() / 2;
    CFState<Rat> st = cf_init_sqrt(D);
    std::vector<Poly<Rat>> a;
    for (int i = 0; i <= M; ++i) {
        auto [ai, nx] = cf_step(st);
        a.push_back(ai);
        st = nx;
    }
    auto cv = convergents(a);
    double factor = log2d_factor(D);
    std::vector<HeightReport> out;
    for (int m = 0; m <= M; ++m) {
        HeightReport r;
        r.m = m;
        int n = cv[static_cast<std::size_t>(m)].q.degree();
        r.degQ = n;
        r.hP = proj_height(cv[static_cast<std::size_t>(m)].p);
        r.hQ = m == 0 ? 0.0 : proj_height(cv[static_cast<std::size_t>(m)].q);
        r.hA = proj_height(a[static_cast<std::size_t>(m)]);
        r.boundP = (static_cast<double>(n + 1) * d + 1.5 * (static_cast<double>(n) * n + n)) * factor;
        r.boundQ = (static_cast<double>(n) * d + 0.5 * (3.0 * n * n + n)) * factor;
        r.withinBounds = r.hP <= r.boundP + 1e-9 && r.hQ <= r.boundQ + 1e-9;
        out.push_back(r);
    }
    return out;
}

}  // namespace hypcf
