#include <doctest.h>

#include <hypcf/fp.hpp>
#include <hypcf/rat.hpp>
#include <hypcf/ratfunc.hpp>
#include <hypcf/valuation.hpp>

#include <random>

using namespace hypcf;

TEST_CASE("p-adic valuation basics") {
    PAdicValuation nu5(5), nu7(7);
    CHECK(nu5.val(rat(50, 3)) == 2);
    CHECK(nu7.val(Rat(0)) == kValInf);
    CHECK(nu5.val(rat(1, 5)) == -1);
    CHECK_THROWS_AS(PAdicValuation(2), InvalidInput);
    CHECK_THROWS_AS(PAdicValuation(6), InvalidInput);
}

TEST_CASE("ord_{t-t0} valuation") {
    TOrdValuation nu(Rat(1));
    // (t^2-1)/(t-2) has a simple zero at t=1
    RatFunc x(Poly<Rat>{Rat(-1), Rat(0), Rat(1)}, Poly<Rat>{Rat(-2), Rat(1)});
    CHECK(nu.val(x) == 1);
    TOrdValuation nu0(Rat(0));
    RatFunc y(Poly<Rat>{Rat(1), Rat(1)}, Poly<Rat>{Rat(-3), Rat(1)});  // (t+1)/(t-3)
    CHECK(nu0.val(y) == 0);
    CHECK(nu0.reduce(y) == rat(-1, 3));
}

TEST_CASE("reduce_elem examples") {
    PAdicValuation nu5(5);
    CHECK(nu5.reduce(rat(7, 3)) == Fp(4, 5));  // 3^{-1} = 2 mod 5, 7*2 = 14 = 4
    CHECK(nu5.reduce(Rat(0)) == Fp(0, 5));
    CHECK_THROWS_AS(nu5.reduce(rat(1, 5)), NegativeValuation);
}

TEST_CASE("normalize_elem") {
    PAdicValuation nu5(5);
    auto [u, e] = normalize_elem(rat(50, 3), nu5);
    CHECK(u == rat(2, 3));
    CHECK(e == 2);
    auto [u2, e2] = normalize_elem(rat(1, 5), nu5);
    CHECK(u2 == Rat(1));
    CHECK(e2 == -1);
    TOrdValuation nu0(Rat(0));
    RatFunc x(Poly<Rat>{Rat(0), Rat(0), Rat(7)}, Poly<Rat>{Rat(1)});  // 7 t^2
    auto [u3, e3] = normalize_elem(x, nu0);
    CHECK(u3 == RatFunc::from_rat(Rat(7)));
    CHECK(e3 == 2);
    CHECK_THROWS_AS(normalize_elem(RatFunc(), nu0), InvalidInput);
}

TEST_CASE("valuation is additive and ultrametric on random rationals") {
    std::mt19937_64 rng(42);
    PAdicValuation nu(13);
    std::uniform_int_distribution<long> d(-400, 400);
    for (int i = 0; i < 200; ++i) {
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (a == 0 || b == 0 || c == 0 || e == 0) continue;
        Rat x = rat(a, std::abs(b)), y = rat(c, std::abs(e));
        CHECK(nu.val(x * y) == nu.val(x) + nu.val(y));
        if (!is_zero(Rat(x + y))) {
            int v = nu.val(x + y);
            CHECK(v >= std::min(nu.val(x), nu.val(y)));
            if (nu.val(x) != nu.val(y)) CHECK(v == std::min(nu.val(x), nu.val(y)));
        }
        // reduce is a ring homomorphism on the valuation ring
        if (nu.val(x) >= 0 && nu.val(y) >= 0) {
            CHECK(nu.reduce(x * y) == nu.reduce(x) * nu.reduce(y));
            CHECK(nu.reduce(x + y) == nu.reduce(x) + nu.reduce(y));
        }
        // reduce(normalize(x)) is nonzero
        auto [u, ee] = normalize_elem(x, nu);
        CHECK(!is_zero(nu.reduce(u)));
    }
}

TEST_CASE("F_p arithmetic and square roots") {
    Fp a(3, 7), b(5, 7);
    CHECK((a * b).value() == 1);
    CHECK((a / b).value() == (3 * 3) % 7);  // 5^{-1} = 3 mod 7
    CHECK_THROWS_AS(a + Fp(1, 11), FieldMismatch);
    auto r = fp_sqrt(Fp(2, 7));  // 3^2 = 2 mod 7, canonical root 3
    REQUIRE(r.has_value());
    CHECK(r->value() == 3);
    CHECK(!fp_sqrt(Fp(3, 7)).has_value());
    auto r2 = fp_sqrt(Fp(4, 13));
    REQUIRE(r2.has_value());
    CHECK(r2->value() == 2);
    for (std::uint64_t p : {5ull, 13ull, 17ull, 97ull, 193ull}) {
        for (std::uint64_t v = 0; v < p; ++v) {
            auto s = fp_sqrt(Fp(v, p));
            if (s) CHECK((*s * *s).value() == v);
        }
    }
}
