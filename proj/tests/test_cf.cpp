#include <doctest.h>

#include <hypcf/cf.hpp>
#include <hypcf/poly_io.hpp>

#include <random>

using namespace hypcf;

namespace {
Poly<Rat> Q(const char* s) { return parse_poly_q(s); }

std::vector<Poly<Rat>> expand(const Poly<Rat>& D, int steps) {
    CFState<Rat> st = cf_init_sqrt(D);
    std::vector<Poly<Rat>> a;
    for (int i = 0; i < steps; ++i) {
        auto [ai, nx] = cf_step(st);
        a.push_back(ai);
        // divisibility invariant s_n | D - (A + t_n)^2 at every step
        (void)poly_exact_div(nx.D - (nx.A + nx.t) * (nx.A + nx.t), nx.s);
        st = nx;
    }
    return a;
}
}  // namespace

TEST_CASE("cf_init_sqrt rejects bad inputs") {
    CHECK_THROWS_AS(cf_init_sqrt(Q("(x^2+1)^2")), SquareInput);
    CHECK_THROWS_AS(cf_init_sqrt(Q("x^3+1")), InvalidInput);
    CHECK_THROWS_AS(cf_init_sqrt(Q("2*x^2+1")), InvalidInput);  // LC not a square
    auto st = cf_init_sqrt(Q("x^4+5*x^2-3*x+19"));
    CHECK(st.A == Q("x^2+5/2"));
    CHECK(st.t == -st.A);
    CHECK(st.s == Q("1"));
}

TEST_CASE("partial quotients of x^4+5x^2-3x+19") {
    auto a = expand(Q("x^4+5*x^2-3*x+19"), 3);
    CHECK(a[0] == Q("x^2+5/2"));
    CHECK(a[1] == Q("-2/3*x-17/6"));
    CHECK(a[2] == Q("-24/329*x+33270/108241"));
}

TEST_CASE("partial quotients of x^6+x") {
    auto a = expand(Q("x^6+x"), 3);
    CHECK(a[0] == Q("x^3"));
    CHECK(a[1] == Q("2*x^2"));
    CHECK(a[2] == Q("2*x^3"));
    auto cv = convergents(a);
    CHECK(cv[1].p == Q("2*x^5+1"));
    CHECK(cv[1].q == Q("2*x^2"));
}

TEST_CASE("deg-2 expansions: a_n = 2A forever") {
    auto a = expand(Q("x^2+1"), 6);
    CHECK(a[0] == Q("x"));
    for (int i = 1; i < 6; ++i) CHECK(a[i] == Q("2*x"));
}

TEST_CASE("determinant identity and degree sums") {
    auto a = expand(Q("x^6+7*x^4+8*x^3+9*x^2+5"), 12);
    auto cv = convergents(a);
    // p_0 q_{-1} - q_0 p_{-1} = -1
    CHECK(cv[0].p * Poly<Rat>() + Poly<Rat>::constant(Rat(-1)) ==
          Poly<Rat>::constant(Rat(-1)));
    for (std::size_t n = 1; n < cv.size(); ++n) {
        Poly<Rat> det = cv[n].p * cv[n - 1].q - cv[n].q * cv[n - 1].p;
        CHECK(det == Poly<Rat>::constant(Rat(n % 2 == 0 ? -1 : 1)));
        int degsum = 0;
        for (std::size_t j = 1; j <= n; ++j) degsum += a[j].degree();
        CHECK(cv[n].q.degree() == degsum);
        // LC(q_n) = prod LC(a_j)
        Rat lcprod(1);
        for (std::size_t j = 1; j <= n; ++j) lcprod *= a[j].lc();
        CHECK(cv[n].q.lc() == lcprod);
    }
}

TEST_CASE("sigma-reducedness") {
    auto st = cf_init_sqrt(Q("x^4+5*x^2-3*x+19"));
    CHECK(!is_sigma_reduced(st));  // sqrt(D) itself is not
    for (int i = 0; i < 30; ++i) st = cf_step(st).second;
    CHECK(is_sigma_reduced(st));
    // t=0, s=1, deg A = 2 is reduced
    CFState<Rat> art{Q("x^4+1"), Q("x^2"), Q("0"), Q("1"), 0};
    CHECK(is_sigma_reduced(art));
}

TEST_CASE("all states n >= 1 are sigma-reduced for sqrt expansions") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Rat> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(coef(rng));
        c.emplace_back(1);
        Poly<Rat> D(std::move(c));
        CFState<Rat> st;
        try {
            st = cf_init_sqrt(D);
        } catch (const SquareInput&) {
            continue;
        }
        for (int n = 0; n < 12; ++n) {
            st = cf_step(st).second;
            CHECK(is_sigma_reduced(st));
        }
    }
}

TEST_CASE("detect_period fixtures") {
    auto r1 = detect_period_sqrt(Q("x^6+x"), 50);
    REQUIRE(r1.status == PeriodStatus::Found);
    CHECK(r1.quasiPeriod == 2);
    CHECK(r1.period == 2);
    CHECK(r1.preperiod == 1);
    CHECK(r1.mu == Rat(1));

    auto r2 = detect_period_sqrt(Q("x^4-8*x^3-42*x^2+424*x-119"), 50);
    REQUIRE(r2.status == PeriodStatus::Found);
    CHECK(r2.quasiPeriod == 8);
    CHECK(r2.period == 8);

    // (X-1)X(X-t)(X+t-1) over Q(t): quasi-period 1, period 2
    auto D = parse_poly_qt("(x-1)*x*(x-t)*(x+t-1)");
    auto r3 = detect_period(cf_init_sqrt(D), 30);
    REQUIRE(r3.status == PeriodStatus::Found);
    CHECK(r3.quasiPeriod == 1);
    CHECK(r3.period == 2);

    // non-Pellian: nothing within the horizon
    auto r4 = detect_period_sqrt(Q("x^4+5*x^2-3*x+19"), 40);
    CHECK(r4.status == PeriodStatus::NotFoundWithin);
}

TEST_CASE("deg-6 quasi-period with mu != 1") {
    auto r = detect_period_sqrt(Q("4*x^6+28*x^5+37*x^4-30*x^3+87*x^2-54*x+9"), 80);
    REQUIRE(r.status == PeriodStatus::Found);
    CHECK(r.quasiPeriod == 27);
    CHECK(r.period == 54);
    CHECK(r.mu == Rat(3));
}

TEST_CASE("cf_init_general") {
    // alpha = (sqrt(D)-3)/X with X | D - 9
    auto D = Q("x^4+16*x^2+24*x+9");
    auto st = cf_init_general(Q("-3"), Q("1"), Q("x"), D);
    auto [a0, st1] = cf_step(st);
    CHECK(a0 == Q("x"));
    auto [a1, st2] = cf_step(st1);
    CHECK(a1 == Q("1/5*x-12/25"));
    // (0,1,1,D) is plain sqrt(D)
    auto st0 = cf_init_general(Q("0"), Q("1"), Q("1"), D);
    auto sts = cf_init_sqrt(D);
    CHECK(st0.t == sts.t);
    CHECK(st0.s == sts.s);
    CHECK_THROWS_AS(cf_init_general(Q("1"), Q("0"), Q("1"), D), InvalidInput);
    // ord(alpha) > 0 rejected: alpha = 1/sqrt(D) shape
    CHECK_THROWS_AS(cf_init_general(Q("0"), Q("1"), Q("x^3"), D), InvalidInput);
}

TEST_CASE("cf_init_general rescaling path agrees with the direct one") {
    auto D = Q("x^4+16*x^2+24*x+9");
    // v = 2 forces the v-then-s rescaling; same alpha = (sqrt(4 D') ... ) --
    // compare partial quotients of (2 sqrt(D) - 6)/(2 X) vs (sqrt(D)-3)/X
    auto stA = cf_init_general(Q("-6"), Q("2"), Q("2*x"), D);
    auto stB = cf_init_general(Q("-3"), Q("1"), Q("x"), D);
    for (int i = 0; i < 8; ++i) {
        auto [aA, nA] = cf_step(stA);
        auto [aB, nB] = cf_step(stB);
        CHECK(aA == aB);
        stA = nA;
        stB = nB;
    }
}

TEST_CASE("cf_rational round trips") {
    auto a = cf_rational(Q("x^2+1"), Q("x"));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == Q("x"));
    CHECK(a[1] == Q("x"));
    CHECK(cf_rational(Q("x^5+3"), Q("1")).size() == 1);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<int> degs(0, 5);
    int done = 0;
    while (done < 100) {
        std::vector<Rat> pc, qc;
        for (int i = 0; i <= degs(rng); ++i) pc.emplace_back(coef(rng));
        for (int i = 0; i <= degs(rng); ++i) qc.emplace_back(coef(rng));
        Poly<Rat> p(std::move(pc)), q(std::move(qc));
        if (is_zero(q)) continue;
        ++done;
        auto cf = cf_rational(p, q);
        auto [pe, qe] = cf_eval(cf);
        // p/q = pe/qe as fractions
        CHECK(p * qe == q * pe);
    }
}

TEST_CASE("scale_cf coherence") {
    auto D = Q("x^4+5*x^2-3*x+19");
    auto a = expand(D, 10);
    Rat mu(2);
    auto scaled = scale_cf(a, mu);
    // CF(2 sqrt(D)) = CF(sqrt(4D)) directly
    auto a2 = expand(D * Rat(4), 10);
    for (int i = 0; i < 10; ++i) CHECK(scaled[static_cast<std::size_t>(i)] == a2[static_cast<std::size_t>(i)]);
    auto twice = scale_cf(scale_cf(a, mu), Rat(Rat(1) / mu));
    for (int i = 0; i < 10; ++i) CHECK(twice[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(i)]);
    CHECK_THROWS_AS(scale_cf(a, Rat(0)), InvalidInput);
}

TEST_CASE("palindromic quasi-period") {
    auto D = Q("x^4-8*x^3-42*x^2+424*x-119");
    auto rep = detect_period_sqrt(D, 40);
    REQUIRE(rep.status == PeriodStatus::Found);
    auto st = cf_init_sqrt(D);
    std::vector<Poly<Rat>> a;
    for (int i = 0; i <= rep.quasiPeriod; ++i) {
        auto [ai, nx] = cf_step(st);
        a.push_back(ai);
        st = nx;
    }
    CHECK(palindrome_check(rep, cf_init_sqrt(D).A, a));
    // a_1 = a_7, a_2 = a_6, a_3 = a_5 explicitly
    CHECK(a[1] == a[7]);
    CHECK(a[2] == a[6]);
    CHECK(a[3] == a[5]);
    CHECK(a[3] == Q("1/32*x+5/32"));
}

TEST_CASE("approximation order ord(p_n - alpha q_n) = deg q_{n+1}") {
    auto D = Q("x^6+7*x^4+8*x^3+9*x^2+5");
    auto a = expand(D, 9);
    auto cv = convergents(a);
    auto S = sqrt_series(D, -2 * cv[8].q.degree() - 8);
    for (int n = 0; n <= 7; ++n) {
        auto theta = LaurentSeries<Rat>::from_poly(cv[static_cast<std::size_t>(n)].p) -
                     S * LaurentSeries<Rat>::from_poly(cv[static_cast<std::size_t>(n)].q);
        CHECK(theta.ord() == cv[static_cast<std::size_t>(n + 1)].q.degree());
    }
}
