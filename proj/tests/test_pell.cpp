#include <doctest.h>

#include <hypcf/pell.hpp>
#include <hypcf/poly_io.hpp>

#include <random>

using namespace hypcf;

namespace {
Poly<Rat> Q(const char* s) { return parse_poly_q(s); }
}

TEST_CASE("pell_verify") {
    auto s = pell_verify(Q("2*x^5+1"), Q("2*x^2"), Q("x^6+x"));
    CHECK(s.omega == Rat(1));
    auto t = pell_verify(Q("1"), Q("0"), Q("x^6+x"));
    CHECK(t.omega == Rat(1));
    auto u = pell_verify(Q("x"), Q("1"), Q("x^2+1"));
    CHECK(u.omega == Rat(-1));
    CHECK_THROWS_AS(pell_verify(Q("x"), Q("1"), Q("x^4+1")), NotConstantResidual);
}

TEST_CASE("pell_mul group law") {
    auto D = Q("x^2+1");
    auto s = pell_verify(Q("x"), Q("1"), D);
    auto e = pell_verify(Q("1"), Q("0"), D);
    auto se = pell_mul(s, e, D);
    CHECK(se.p == s.p);
    CHECK(se.q == s.q);
    auto inv = pell_verify(Q("x"), Q("-1"), D);
    auto prod = pell_mul(s, inv, D);
    CHECK(prod.p == Q("-1"));
    CHECK(is_zero(prod.q));
    // square of the x^6+x solution still verifies, omega = 1
    auto D2 = Q("x^6+x");
    auto m = pell_verify(Q("2*x^5+1"), Q("2*x^2"), D2);
    auto sq = pell_mul(m, m, D2);
    CHECK(sq.omega == Rat(1));
}

TEST_CASE("pell_mul is associative/commutative on solutions from F_p periods") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint64_t> cf(0, 12);
    int done = 0;
    while (done < 25) {
        std::vector<Fp> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(cf(rng), 13);
        c.emplace_back(1, 13);
        Poly<Fp> D(std::move(c));
        PeriodReport<Fp> rep;
        try {
            rep = detect_period(cf_init_sqrt(D), 2000);
        } catch (const InvalidInput&) {
            continue;
        }
        if (rep.status != PeriodStatus::Found) continue;
        ++done;
        auto s1 = pell_from_period(D, rep.quasiPeriod);
        auto s2 = pell_mul(s1, s1, D);
        auto s3 = pell_mul(s2, s1, D);
        auto lhs = pell_mul(pell_mul(s1, s2, D), s3, D);
        auto rhs = pell_mul(s1, pell_mul(s2, s3, D), D);
        CHECK(lhs.p == rhs.p);
        CHECK(lhs.q == rhs.q);
        auto ab = pell_mul(s2, s3, D);
        auto ba = pell_mul(s3, s2, D);
        CHECK(ab.p == ba.p);
        // normalize to omega = 1
        auto unit = pell_to_unit_omega(s1, D);
        CHECK(unit.omega == Fp(1, 13));
    }
}

TEST_CASE("pell_from_period fixtures") {
    auto s = pell_from_period(Q("x^6+x"), 2);
    CHECK(s.p == Q("2*x^5+1"));
    CHECK(s.q == Q("2*x^2"));
    CHECK(s.omega == Rat(1));
    auto t = pell_from_period(Q("x^2+1"), 1);
    CHECK(t.p == Q("x"));
    CHECK(t.q == Q("1"));
    CHECK(t.omega == Rat(-1));
    auto u = pell_from_period(Q("x^4-8*x^3-42*x^2+424*x-119"), 8);
    CHECK(u.p.degree() == 9);
    CHECK(u.q.degree() == 7);
}

TEST_CASE("torsion orders of x^4+5x^2-3x+19") {
    auto D = Q("x^4+5*x^2-3*x+19");
    auto r5 = torsion_order_mod(D, 5);
    CHECK(r5.quasiPeriod == 7);
    CHECK(r5.torsionOrder == 8);
    CHECK(r5.genus == 1);
    CHECK(r5.squareFree);
    auto r7 = torsion_order_mod(D, 7);
    CHECK(r7.torsionOrder == 3);
    CHECK(r7.quasiPeriod == 2);
    CHECK(!r7.squareFree);  // (x-2)^2 divides D mod 7
    auto r19 = torsion_order_mod(D, 19);
    CHECK(r19.torsionOrder == 7);
    CHECK(r19.quasiPeriod == 6);
    // genus 1: m = ell + 1 always
    for (auto* r : {&r5, &r7, &r19}) CHECK(r->torsionOrder == r->quasiPeriod + 1);
    CHECK_THROWS_AS(torsion_order_mod(D, 3), SquareReduction);
    CHECK_THROWS_AS(torsion_order_mod(D, 2), BadPrime);
}

TEST_CASE("torsion order of x^6+x mod 3") {
    auto r = torsion_order_mod(Q("x^6+x"), 3);
    CHECK(r.torsionOrder == 5);  // consistent with deg p_1 = 5 over Q
}

TEST_CASE("two-prime certificates") {
    auto D1 = Q("x^4+5*x^2-3*x+19");
    auto c1 = two_prime_test(D1, 5, 7);
    CHECK(c1.notPellian);
    CHECK(c1.r1.torsionOrder == 8);
    CHECK(c1.r2.torsionOrder == 3);

    auto D2 = Q("x^8-x^7-3/4*x^6+7/2*x^5-21/4*x^4+7/2*x^3-3/4*x^2-x+1");
    auto c2 = two_prime_test(D2, 3, 11);
    CHECK(c2.notPellian);
    CHECK(c2.r1.torsionOrder == 10);
    CHECK(c2.r2.torsionOrder == 40);

    auto c3 = two_prime_test(Q("x^6+x"), 3, 7);
    CHECK(!c3.notPellian);
    CHECK(c3.bound == 5);
}

TEST_CASE("two-prime test never rejects Pellian D") {
    // Pellian corpus: deg-2 (always Pellian) and the known periodic examples
    std::vector<Poly<Rat>> corpus = {Q("x^6+x"), Q("x^4-8*x^3-42*x^2+424*x-119"),
                                     Q("4*x^6+28*x^5+37*x^4-30*x^3+87*x^2-54*x+9")};
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs = {{5, 7}, {7, 11}, {5, 13}};
    for (const auto& D : corpus)
        for (auto [p1, p2] : pairs) {
            TwoPrimeResult r;
            try {
                r = two_prime_test(D, p1, p2);
            } catch (const InvalidInput&) {
                continue;  // square reduction or bad prime: not admissible
            }
            CHECK(!r.notPellian);
        }
}

TEST_CASE("char2_decompose") {
    auto mk = [](std::initializer_list<int> asc) {
        std::vector<Fp> c;
        for (int v : asc) c.emplace_back(static_cast<std::uint64_t>(v), 2);
        return Poly<Fp>(std::move(c));
    };
    auto r = char2_decompose(mk({1, 0, 1, 0, 1}));  // X^4+X^2+1
    REQUIRE(r.has_value());
    CHECK(r->first == mk({1, 1, 1}));
    CHECK(is_zero(r->second));
    CHECK(!char2_decompose(mk({0, 0, 0, 1, 1})).has_value());  // X^4+X^3
    auto r2 = char2_decompose(mk({0, 0, 1}));  // X^2
    REQUIRE(r2.has_value());
    CHECK(r2->first == mk({0, 1}));
}
