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

#include <utility>
#include <vector>

#include "hypcf/laurent.hpp"
#include "hypcf/poly.hpp"
#include "hypcf/valuation.hpp"

namespace hypcf {

/// Linear system whose kernel elements are the convergents (p, q) of alpha
/// with deg q <= n: a negated identity block for the coefficients of p next
/// to a Toeplitz block in the series coefficients of alpha.
template <class K>
struct ToeplitzSystem {
    int n = 0;                        // deg q bound
    int N = 0;                        // -ord(alpha)
    std::vector<std::vector<K>> M;    // (N+2n+1) x (N+2n+2)
};

template <class K>
ToeplitzSystem<K> build_system(const LaurentSeries<K>& alpha, int n) {
    if (alpha.is_zero_on_window()) throw InvalidInput("build_system: zero series");
    ToeplitzSystem<K> sys;
    sys.n = n;
    sys.N = -alpha.ord();
    if (sys.N < 0) throw InvalidInput("build_system: need ord(alpha) <= 0");
    if (!alpha.exact() && alpha.lo() > -2 * n)
        throw WindowError("build_system: window must reach exponent -2n");
    const int rows = sys.N + 2 * n + 1;
    const int cols = sys.N + 2 * n + 2;
    const K zero = zero_like(alpha.leading());
    const K one = one_like(alpha.leading());
    sys.M.assign(static_cast<std::size_t>(rows),
                 std::vector<K>(static_cast<std::size_t>(cols), zero));
    // rows correspond to the coefficients of alpha*q - p at exponents
    // N+n, N+n-1, ..., -n ; columns: P_{n+N}..P_0 then Q_n..Q_0
    const int pcols = sys.N + n + 1;
    for (int r = 0; r < rows; ++r) {
        int e = sys.N + n - r;  // exponent this row constrains
        if (r < pcols) sys.M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = -one;
        for (int j = 0; j <= n; ++j) {
            // q-column j holds Q_{n-j}, multiplying X^{n-j}: coefficient of
            // alpha at exponent e - (n - j)
            int ae = e - (n - j);
            sys.M[static_cast<std::size_t>(r)][static_cast<std::size_t>(pcols + j)] =
                alpha.coeff_with(ae - 0, zero);
        }
    }
    return sys;
}

namespace detail {

/// One Gaussian elimination pass over the field, with pivot bookkeeping in
/// place of independent determinants. Returns the kernel vector scaled to the
/// signed minors: x_j = (-1)^j det(M with column j struck), 0-indexed.
template <class K>
std::vector<K> minor_kernel(ToeplitzSystem<K> sys) {
    auto& M = sys.M;
    const int rows = static_cast<int>(M.size());
    const int cols = static_cast<int>(M[0].size());
    const K kzero = zero_like(M[0][0]);
    const K kone = one_like(M[0][0]);

    std::vector<int> pivotCol(static_cast<std::size_t>(rows), -1);
    std::vector<bool> colUsed(static_cast<std::size_t>(cols), false);
    K detAcc = kone;  // product of pivots, sign-corrected for row swaps
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != rank) {
            std::swap(M[static_cast<std::size_t>(pr)], M[static_cast<std::size_t>(rank)]);
            detAcc = -detAcc;
        }
        K piv = M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        detAcc = detAcc * piv;
        for (int r = rank + 1; r < rows; ++r) {
            K f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (is_zero(f)) continue;
            f = f / piv;
            for (int cc = c; cc < cols; ++cc)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
                    M[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -
                    f * M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
        }
        pivotCol[static_cast<std::size_t>(rank)] = c;
        colUsed[static_cast<std::size_t>(c)] = true;
        ++rank;
    }
    if (rank < rows) throw RankDeficiency("Toeplitz system is rank deficient", cols - rank);

    int jf = -1;  // the single free column
    for (int c = 0; c < cols; ++c)
        if (!colUsed[static_cast<std::size_t>(c)]) {
            jf = c;
            break;
        }
    std::vector<K> x(static_cast<std::size_t>(cols), kzero);
    x[static_cast<std::size_t>(jf)] = kone;
    for (int r = rank - 1; r >= 0; --r) {
        int pc = pivotCol[static_cast<std::size_t>(r)];
        K acc = kzero;
        for (int c = pc + 1; c < cols; ++c) {
            const K& m = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (!is_zero(m) && !is_zero(x[static_cast<std::size_t>(c)]))
                acc = acc + m * x[static_cast<std::size_t>(c)];
        }
        x[static_cast<std::size_t>(pc)] =
            -acc / M[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)];
    }
    // Striking column jf keeps the pivot columns in their original relative
    // order, so detAcc already is det(M minus column jf). The minor vector is
    // x * (-1)^jf * detAcc.
    K scale = (jf % 2 == 0) ? detAcc : -detAcc;
    for (auto& xi : x) xi = xi * scale;
    return x;
}

}  // namespace detail

/// Kernel element of the system, scaled to the signed minors. The returned
/// (p, q) is a convergent: ord(p - alpha q) > deg q.
template <class K>
std::pair<Poly<K>, Poly<K>> kernel_convergent(const ToeplitzSystem<K>& sys) {
    auto x = detail::minor_kernel(sys);
    const int pcols = sys.N + sys.n + 1;
    std::vector<K> pc(x.begin(), x.begin() + pcols);
    std::vector<K> qc(x.begin() + pcols, x.end());
    std::reverse(pc.begin(), pc.end());
    std::reverse(qc.begin(), qc.end());
    Poly<K> p{std::vector<K>(pc)};
    Poly<K> q{std::vector<K>(qc)};
    if (is_zero(q)) throw InternalError("kernel_convergent: q = 0");
    return {p, q};
}

/// Minor-normalized convergents stay integral: p, q land in O[X], and
/// nu(q) = 0 whenever reduction does not drop deg q.
template <class V>
bool normalization_check(const Poly<typename V::Field>& D, const V& nu, int n) {
    using K = typename V::Field;
    if (gauss_norm(D, nu) < 0 || nu.val(D.lc()) != 0)
        throw InvalidInput("normalization_check: D not reducible at nu");
    auto S = sqrt_series(D, -2 * n - 1);
    auto sys = build_system(S, n);
    auto [p, q] = kernel_convergent(sys);
    if (gauss_norm(p, nu) < 0 || gauss_norm(q, nu) < 0) return false;
    auto [qhat, e] = normalize_poly(q, nu);
    if (reduce_poly(qhat, nu).degree() == q.degree() && e != 0) return false;
    return true;
}

}  // namespace hypcf
