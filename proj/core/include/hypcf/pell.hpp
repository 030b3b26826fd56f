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

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hypcf/cf.hpp"
#include "hypcf/valuation.hpp"

namespace hypcf {

/// Solution of the unit-norm equation p^2 - D q^2 = omega, omega a nonzero
/// constant. Nontrivial iff q != 0.
template <class K>
struct PellSolution {
    Poly<K> p;
    Poly<K> q;
    K omega;
};

struct NotConstantResidual : Error {
    explicit NotConstantResidual(const std::string& msg) : Error(msg) {}
};

template <class K>
PellSolution<K> pell_verify(const Poly<K>& p, const Poly<K>& q, const Poly<K>& D) {
    Poly<K> res = p * p - D * q * q;
    if (is_zero(res)) throw NotConstantResidual("p^2 - D q^2 = 0");
    if (res.degree() != 0)
        throw NotConstantResidual("p^2 - D q^2 has degree " + std::to_string(res.degree()));
    return {p, q, res.lc()};
}

/// Group law: (p,q)*(p',q') = (pp' + Dqq', pq' + p'q);  omega multiplies.
template <class K>
PellSolution<K> pell_mul(const PellSolution<K>& a, const PellSolution<K>& b, const Poly<K>& D) {
    Poly<K> p = a.p * b.p + D * a.q * b.q;
    Poly<K> q = a.p * b.q + b.p * a.q;
    PellSolution<K> r = pell_verify(p, q, D);
    if (!(r.omega == a.omega * b.omega)) throw InternalError("pell_mul: omega mismatch");
    return r;
}

/// Nontrivial solution from a periodic expansion: (p_{ell-1}, q_{ell-1}) with
/// omega = (-1)^ell s_ell.
template <class K>
PellSolution<K> pell_from_period(const Poly<K>& D, int quasiPeriod) {
    if (quasiPeriod <= 0) throw InvalidInput("pell_from_period: period not found");
    CFState<K> st = cf_init_sqrt(D);
    std::vector<Poly<K>> a;
    for (int i = 0; i < quasiPeriod; ++i) {
        auto [ai, next] = cf_step(st);
        a.push_back(ai);
        st = next;
    }
    auto cv = convergents(a);
    return pell_verify(cv.back().p, cv.back().q, D);
}

/// Scale a unit-norm solution to a solution of p^2 - D q^2 = 1 via
/// (p', q') = omega^{-1} (p^2 + D q^2, 2 p q).
template <class K>
PellSolution<K> pell_to_unit_omega(const PellSolution<K>& s, const Poly<K>& D) {
    K inv = one_like(s.omega) / s.omega;
    Poly<K> p = (s.p * s.p + D * s.q * s.q) * inv;
    Poly<K> q = (s.p * s.q) * (inv + inv);
    return pell_verify(p, q, D);
}

struct TorsionReport {
    std::uint64_t prime = 0;
    int quasiPeriod = 0;   // ell of CF(sqrt(D mod p))
    long torsionOrder = 0; // m = deg p_{ell-1}
    int genus = 0;
    bool squareFree = true;  // of D mod p; geometric reading of m needs this
};

struct BadPrime : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct SquareReduction : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// Run CF(sqrt(D mod p)) over F_p and read off the quasi-period and the
/// torsion order m = deg p_{ell-1}. D mod p must not be a square; when it is
/// not square-free the expansion is still fine but m loses its Jacobian
/// meaning, which the squareFree flag records.
inline TorsionReport torsion_order_mod(const Poly<Rat>& D, std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw BadPrime("need an odd prime");
    PAdicValuation nu(p);
    if (gauss_norm(D, nu) < 0) throw BadPrime("p divides a denominator of D");
    if (nu.val(D.lc()) != 0) throw BadPrime("p divides LC(D)");
    Poly<Fp> Dp = reduce_poly(D, nu);
    auto rt = fp_sqrt(Dp.lc());
    if (!rt) throw BadPrime("LC(D) mod p is not a square");

    TorsionReport rep;
    rep.prime = p;
    rep.genus = D.degree() / 2 - 1;
    rep.squareFree = poly_is_squarefree(Dp);

    CFState<Fp> st;
    try {
        st = cf_init_sqrt(Dp);
    } catch (const SquareInput&) {
        throw SquareReduction("D mod p is a square");
    }
    long bound = sigma_reduced_bound(p, Dp.degree());
    auto rep0 = detect_period(st, bound + 2);
    if (rep0.status != PeriodStatus::Found)
        throw InternalError("torsion_order_mod: no period within the finite-field bound");
    rep.quasiPeriod = rep0.quasiPeriod;

    std::vector<Poly<Fp>> a;
    CFState<Fp> s2 = cf_init_sqrt(Dp);
    for (int i = 0; i < rep.quasiPeriod; ++i) {
        auto [ai, nx] = cf_step(s2);
        a.push_back(ai);
        s2 = nx;
    }
    rep.torsionOrder = convergents(a).back().p.degree();
    return rep;
}

struct TwoPrimeResult {
    bool notPellian = false;
    TorsionReport r1, r2;
    int e1cap = 0, e2cap = 0;
    long bound = 0;  // m | bound when notPellian is false
};

/// Pellianity test by reduction modulo two primes: a torsion order m over Q
/// would satisfy m = p1^{e1} m1 = p2^{e2} m2 with e1 <= v_{p1}(m2) and
/// e2 <= v_{p2}(m1). No admissible pair => not Pellian; otherwise m divides
/// gcd(p1^{e1'} m1, p2^{e2'} m2).
inline TwoPrimeResult two_prime_test(const Poly<Rat>& D, std::uint64_t p1, std::uint64_t p2) {
    if (p1 == p2) throw InvalidInput("two_prime_test: need distinct primes");
    TwoPrimeResult res;
    res.r1 = torsion_order_mod(D, p1);
    res.r2 = torsion_order_mod(D, p2);
    auto valp = [](long m, std::uint64_t p) {
        int v = 0;
        while (m % static_cast<long>(p) == 0) {
            m /= static_cast<long>(p);
            ++v;
        }
        return v;
    };
    res.e1cap = valp(res.r2.torsionOrder, p1);
    res.e2cap = valp(res.r1.torsionOrder, p2);
    bool compatible = false;
    long c1 = res.r1.torsionOrder;
    for (int e1 = 0; e1 <= res.e1cap && !compatible; ++e1) {
        long c2 = res.r2.torsionOrder;
        for (int e2 = 0; e2 <= res.e2cap; ++e2) {
            if (c1 == c2) {
                compatible = true;
                break;
            }
            c2 *= static_cast<long>(p2);
        }
        c1 *= static_cast<long>(p1);
    }
    if (!compatible) {
        res.notPellian = true;
        return res;
    }
    long b1 = res.r1.torsionOrder;
    for (int i = 0; i < res.e1cap; ++i) b1 *= static_cast<long>(p1);
    long b2 = res.r2.torsionOrder;
    for (int i = 0; i < res.e2cap; ++i) b2 *= static_cast<long>(p2);
    res.bound = std::gcd(b1, b2);
    return res;
}

/// Characteristic 2: D = E^2 + r solvable iff all odd-degree coefficients of
/// D vanish; over the perfect field F_2 the square root is termwise and r = 0.
/// nullopt certifies that no nontrivial unit-norm solution exists.
inline std::optional<std::pair<Poly<Fp>, Fp>> char2_decompose(const Poly<Fp>& D) {
    if (is_zero(D)) return std::make_pair(Poly<Fp>(), Fp(0, 2));
    if (D.lc().modulus() != 2) throw InvalidInput("char2_decompose: field must be F_2");
    for (int i = 1; i <= D.degree(); i += 2)
        if (!is_zero(D.coeff_or(i, Fp(0, 2)))) return std::nullopt;
    std::vector<Fp> e;
    for (int i = 0; i <= D.degree(); i += 2) e.push_back(D.coeff_or(i, Fp(0, 2)));
    return std::make_pair(Poly<Fp>(std::move(e)), Fp(0, 2));
}

}  // namespace hypcf
