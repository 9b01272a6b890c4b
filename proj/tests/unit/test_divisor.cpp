#include <doctest.h>

#include "testkit.hpp"

using namespace testkit;

TEST_CASE("denom_index examples") {
    CHECK(denom_index(D({{"0", "-2/5"}})) == 5);
    CHECK(denom_index(D({{"0", "-1/3"}, {"1", "-1/2"}})) == 6);
    CHECK(denom_index(QDivisor()) == 1);
}

TEST_CASE("floor_frac examples") {
    auto a = floor_frac(D({{"0", "-3/2"}}));
    CHECK(a.floor == D({{"0", "-2"}}));
    CHECK(a.frac == D({{"0", "1/2"}}));
    auto b = floor_frac(D({{"1", "2"}}));
    CHECK(b.floor == D({{"1", "2"}}));
    CHECK(b.frac.is_zero());
    for (std::int64_t n = 2; n <= 9; ++n) {
        auto c = floor_frac(QDivisor::point(Rat(0), Rat(1, n)));
        CHECK(c.floor.is_zero());
        CHECK(c.frac == QDivisor::point(Rat(0), Rat(1, n)));
    }
}

TEST_CASE("divisor construction merges points and drops zeros") {
    const QDivisor x = D({{"0", "1/2"}, {"0", "-1/2"}, {"1", "2"}, {"1/2", "1"}, {"1", "1"}});
    CHECK(x == D({{"1/2", "1"}, {"1", "3"}}));
    CHECK(x.degree() == Rat(4));
    CHECK(x.support() == std::vector<Rat>{R("1/2"), R("1")});
}

TEST_CASE("pairs with a positive sum are rejected") {
    try {
        DivisorPair p(D({{"0", "1/2"}}), D({{"0", "-1/3"}}));
        FAIL("expected PositiveSum");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PositiveSum);
    }
    CHECK_NOTHROW(DivisorPair(D({{"0", "1/2"}}), D({{"0", "-1/2"}})));
}

TEST_CASE("normalize_pair examples") {
    CHECK(normalize_pair({D({{"0", "1/2"}}), D({{"0", "-1/2"}, {"1", "-1"}})}) ==
          DivisorPair(D({{"0", "-1/2"}}), D({{"0", "1/2"}, {"1", "-1"}})));
    for (std::int64_t d = 2; d <= 3; ++d)
        for (std::int64_t n = 2; n <= 4; ++n) {
            const DivisorPair bertin(QDivisor::point(Rat(0), Rat(1, n)),
                                     QDivisor({{Rat(0), Rat(-1, n)}, {Rat(-1), Rat(-1, n * (d - 1))}}));
            const DivisorPair want(QDivisor::point(Rat(0), Rat(-(n - 1), n)),
                                   QDivisor({{Rat(0), Rat(n - 1, n)}, {Rat(-1), Rat(-1, n * (d - 1))}}));
            CHECK(normalize_pair(bertin) == want);
        }
    for (std::int64_t d = 1; d <= 5; ++d) {
        const DivisorPair dihedral(QDivisor(), QDivisor::point(Rat(0), Rat(-d)));
        CHECK(normalize_pair(dihedral) == dihedral);
    }
}

TEST_CASE("normalize_pair is idempotent and keeps the sum") {
    Gen g(21);
    for (int i = 0; i < 300; ++i) {
        const DivisorPair p = g.pair();
        const DivisorPair n = normalize_pair(p);
        CHECK(normalize_pair(n) == n);
        CHECK(n.sum() == p.sum());
        for (const auto& [a, c] : n.plus().terms()) {
            CHECK(c <= Rat(0));
            CHECK(c > Rat(-1));
        }
        CHECK(shift_equivalent(p, n));
    }
}

TEST_CASE("denom_index is minimal") {
    Gen g(22);
    for (int i = 0; i < 300; ++i) {
        const QDivisor x = g.divisor();
        const std::int64_t d = denom_index(x);
        CHECK((Rat(d) * x).is_integral());
        if (d > 1) CHECK_FALSE((Rat(d - 1) * x).is_integral());
    }
}

TEST_CASE("shift_equivalent examples") {
    for (std::int64_t d = 1; d <= 4; ++d) {
        const DivisorPair a(QDivisor(), QDivisor::point(Rat(0), Rat(-d)));
        const DivisorPair b(QDivisor::point(Rat(0), Rat(-d)), QDivisor());
        CHECK(shift_equivalent(a, b));
        CHECK_FALSE(shift_equivalent(a, DivisorPair()));
    }
}

TEST_CASE("shift_equivalent is an equivalence relation") {
    Gen g(23);
    for (int i = 0; i < 200; ++i) {
        const DivisorPair p = g.pair();
        const DivisorPair q = g.coin() ? p.shift(g.integral_divisor()) : g.pair();
        const DivisorPair r = g.coin() ? q.shift(g.integral_divisor()) : g.pair();
        CHECK(shift_equivalent(p, p));
        CHECK(shift_equivalent(p, q) == shift_equivalent(q, p));
        if (shift_equivalent(p, q) && shift_equivalent(q, r)) CHECK(shift_equivalent(p, r));
        CHECK(shift_equivalent(p, p.shift(g.integral_divisor())));
    }
}

TEST_CASE("affine_equivalent examples") {
    const DivisorPair quadric(QDivisor(), D({{"1", "-1"}, {"-1", "-1"}}));
    const DivisorPair moved(QDivisor(), D({{"0", "-1"}, {"2", "-1"}}));
    auto g = affine_equivalent(quadric, moved);
    REQUIRE(g.has_value());
    CHECK(shift_equivalent(quadric.transport(*g), moved));
    CHECK_FALSE(affine_equivalent(quadric, {D({{"0", "-1/2"}}), D({{"0", "1/2"}, {"1", "-1"}})}).has_value());
    auto id = affine_equivalent(quadric, quadric);
    REQUIRE(id.has_value());
    CHECK(shift_equivalent(quadric.transport(*id), quadric));
}

TEST_CASE("affine equivalence is symmetric under random affine maps") {
    Gen g(24);
    for (int i = 0; i < 150; ++i) {
        const DivisorPair p = g.pair();
        Rat scale = g.rat(3, 2);
        if (scale.is_zero()) scale = Rat(1);
        const AffineMap m(scale, g.rat());
        const DivisorPair q = p.transport(m).shift(g.integral_divisor());
        auto f = affine_equivalent(p, q);
        REQUIRE(f.has_value());
        CHECK(shift_equivalent(p.transport(*f), q));
        auto b = affine_equivalent(q, p);
        REQUIRE(b.has_value());
        CHECK(shift_equivalent(q.transport(*b), p));
        CHECK(shift_equivalent(q.transport(f->inverse()), p));
    }
}
