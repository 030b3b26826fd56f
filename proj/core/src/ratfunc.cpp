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

#include "hypcf/ratfunc.hpp"

namespace hypcf {

std::optional<Poly<Rat>> poly_sqrt_rat(const Poly<Rat>& f) {
    if (is_zero(f)) return Poly<Rat>();
    if (f.degree() % 2 != 0) return std::nullopt;
    auto root = rat_sqrt(f.lc());
    if (!root) return std::nullopt;
    const int d = f.degree() / 2;
    std::vector<Rat> g(static_cast<std::size_t>(d) + 1, Rat(0));
    g[static_cast<std::size_t>(d)] = *root;
    for (int k = d - 1; k >= 0; --k) {
        Rat s(0);
        for (int i = k + 1; i <= d; ++i) {
            int j = d + k - i;
            if (j > k && j <= d) s += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
        }
        g[static_cast<std::size_t>(k)] = (f.coeff_or(d + k, Rat(0)) - s) / (*root * 2);
    }
    Poly<Rat> gp(std::move(g));
    if (!(gp * gp == f)) return std::nullopt;
    return gp;
}

}  // namespace hypcf

namespace hypcf {

Poly<Rat> poly_primitive_int(const Poly<Rat>& f) {
    if (is_zero(f)) return f;
    Int l(1);
    for (const auto& c : f.coeffs())
        if (!is_zero(c)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Int g(0);
    for (const auto& c : f.coeffs()) {
        if (is_zero(c)) continue;
        Int scaled = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat scale(l, g);
    scale.canonicalize();
    return f * scale;
}

Poly<Rat> poly_gcd_monic(const Poly<Rat>& a0, const Poly<Rat>& b0) {
    if (is_zero(a0)) return is_zero(b0) ? b0 : b0 / b0.lc();
    if (is_zero(b0)) return a0 / a0.lc();
    Poly<Rat> a = poly_primitive_int(a0);
    Poly<Rat> b = poly_primitive_int(b0);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (b.degree() > 0) {
        // pseudo-remainder keeps everything integral
        int delta = a.degree() - b.degree();
        Rat scale = rat_pow(b.lc(), delta + 1);
        auto [q, r] = poly_divmod(a * scale, b);
        (void)q;
        if (is_zero(r)) return b / b.lc();
        a = std::move(b);
        b = poly_primitive_int(r);
    }
    // nonzero constant remainder: coprime
    return Poly<Rat>::constant(Rat(1));
}

}  // namespace hypcf
