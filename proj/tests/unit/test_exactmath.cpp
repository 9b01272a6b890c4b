#include <doctest.h>

#include "testkit.hpp"

using namespace testkit;

TEST_CASE("rational literals parse to lowest terms") {
    CHECK(R("6/4") == Rat(3, 2));
    CHECK(R("-2/6").str() == "-1/3");
    CHECK(R("0/5").str() == "0");
    CHECK(R("7").is_integer());
    for (const char* bad : {"", "1/0", "1 /2", "+3", "a", "1/-2", "--1"})
        CHECK_THROWS_AS(Rat::parse(bad), Error);
}

TEST_CASE("rational floor and ceiling") {
    CHECK(R("-3/2").floor() == -2);
    CHECK(R("-3/2").ceil() == -1);
    CHECK(R("5/3").floor() == 1);
    CHECK(R("4").ceil() == 4);
}

TEST_CASE("rationals survive products of large denominators") {
    Rat x(1);
    for (int i = 0; i < 40; ++i) x *= Rat(1, 1000003);
    Rat y = x;
    for (int i = 0; i < 40; ++i) y *= Rat(1000003);
    CHECK(y == Rat(1));
    CHECK_THROWS_AS(x.to_int64(), Error);
}

TEST_CASE("mod_inverse examples") {
    CHECK(mod_inverse(3, 5) == 2);
    CHECK(mod_inverse(0, 1) == 0);
    CHECK(mod_inverse(7, 1) == 0);
    CHECK(mod_inverse(1, 2) == 1);
    try {
        mod_inverse(2, 4);
        FAIL("expected NotCoprime");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCoprime);
    }
}

TEST_CASE("mod_inverse agrees with an exhaustive residue scan") {
    for (std::int64_t d = 1; d <= 30; ++d)
        for (std::int64_t e = 0; e < 3 * d; ++e) {
            if (d > 1 && std::gcd(e, d) != 1) continue;
            std::int64_t scan = 0;
            if (d > 1)
                for (std::int64_t c = 0; c < d; ++c)
                    if ((e * c) % d == 1) scan = c;
            CHECK(mod_inverse(e, d) == scan);
        }
}

TEST_CASE("polynomial rendering and evaluation") {
    CHECK(P({0, 1, 1}).str() == "t^2+t");
    CHECK(P({-1, 0, 1}).str("s") == "s^2-1");
    CHECK(P({1, 2}).str() == "2*t+1");
    CHECK(Poly().str() == "0");
    CHECK(P({0, 1, 1})(Rat(-1)) == Rat(0));
    CHECK(P({0, 1, 1}).inflate(2) == P({0, 0, 1, 0, 1}));
    CHECK(P({0, 0, 1}).translate(Rat(1)) == P({1, 2, 1}));
    CHECK(P({0, 0, 0, 1}).t_adic_order() == 3);
    CHECK(P({1, -2, 1}).root_multiplicity(Rat(1)) == 2);
}

TEST_CASE("polynomial division and gcd") {
    const Poly a = P({-1, 0, 1});
    const Poly b = P({1, 1});
    auto [q, r] = divmod(a, b);
    CHECK(q == P({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(P({0, 1, 1}), P({0, 0, 1})) == P({0, 1}));
    CHECK_THROWS_AS(divmod(a, Poly()), Error);
}

TEST_CASE("rational linear factorization examples") {
    const auto f1 = rational_linear_factorization(P({0, 1, 1}));
    CHECK(f1.leading == Rat(1));
    REQUIRE(f1.roots.size() == 2);
    CHECK(f1.roots[0] == RootMultiplicity{Rat(-1), 1});
    CHECK(f1.roots[1] == RootMultiplicity{Rat(0), 1});
    CHECK(f1.remainder == Poly(Rat(1)));

    const auto f2 = rational_linear_factorization(P({0, 0, 0, 1}));
    REQUIRE(f2.roots.size() == 1);
    CHECK(f2.roots[0] == RootMultiplicity{Rat(0), 3});

    const auto f3 = rational_linear_factorization(P({1, 0, 1}));
    CHECK(f3.roots.empty());
    CHECK(f3.remainder == P({1, 0, 1}));

    const auto f4 = rational_linear_factorization(Poly({R("-1/3"), R("0"), R("3")}));
    CHECK(f4.leading == Rat(3));
    REQUIRE(f4.roots.size() == 2);
    CHECK(f4.roots[0].root == R("-1/3"));
    CHECK(f4.roots[1].root == R("1/3"));

    CHECK_THROWS_AS(rational_linear_factorization(Poly()), Error);
}

TEST_CASE("factorization round-trips on random products") {
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
        Poly p = g.split_poly(4) * (g.coin() ? P({1, 0, 1}) : P({1}));
        const auto f = rational_linear_factorization(p);
        CHECK(f.expand() == p);
        CHECK(f.remainder.is_unitary());
        for (std::size_t j = 1; j < f.roots.size(); ++j) CHECK(f.roots[j - 1].root < f.roots[j].root);
    }
}

TEST_CASE("rational and polynomial ring laws on random samples") {
    Gen g(12);
    for (int i = 0; i < 300; ++i) {
        const Rat a = g.rat(), b = g.rat(), c = g.rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rat(0) == a);
        CHECK(a * Rat(1) == a);
        const Poly p = g.poly(), q = g.poly(), r = g.poly();
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p - p == Poly());
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("rational functions reduce canonically") {
    Gen g(13);
    for (int i = 0; i < 200; ++i) {
        const Poly a = g.poly(3);
        const Poly b = g.nonzero_poly(3);
        const Poly c = g.nonzero_poly(2);
        CHECK(RatFunc(a, b) == RatFunc(a * c, b * c));
        const RatFunc f(a, b);
        CHECK(f.den().is_unitary());
        CHECK(gcd(f.num(), f.den()).degree() <= 0);
    }
}

TEST_CASE("rational function field laws") {
    Gen g(14);
    for (int i = 0; i < 200; ++i) {
        const RatFunc f = g.ratfunc(), h = g.ratfunc(), k = g.ratfunc();
        CHECK((f + h) + k == f + (h + k));
        CHECK(f * (h + k) == f * h + f * k);
        CHECK((f * h).derivative() == f.derivative() * h + f * h.derivative());
        if (!f.is_zero()) CHECK(f * f.inverse() == RatFunc(1));
    }
}

TEST_CASE("order of vanishing") {
    const RatFunc f(P({0, 0, 1}), P({1, 1}));
    CHECK(f.order_at(Rat(0)) == 2);
    CHECK(f.order_at(Rat(-1)) == -1);
    CHECK(f.order_at(Rat(5)) == 0);
    CHECK(RatFunc::linear_power(Rat(2), -3).order_at(Rat(2)) == -3);
}
