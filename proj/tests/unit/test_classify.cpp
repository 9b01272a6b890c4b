#include <doctest.h>

#include "dpd/serialize.hpp"
#include "testkit.hpp"

using namespace testkit;

namespace {

DivisorPair danielewski(std::int64_t d) {
    return {QDivisor(), QDivisor({{Rat(0), Rat(-1, d)}, {Rat(-1), Rat(-1, d)}})};
}

DivisorPair bertin(std::int64_t d, std::int64_t n) {
    return {QDivisor::point(Rat(0), Rat(1, n)), QDivisor({{Rat(0), Rat(-1, n)}, {Rat(-1), Rat(-1, n * (d - 1))}})};
}

DivisorPair dihedral(std::int64_t d) { return {QDivisor(), QDivisor::point(Rat(0), Rat(-d))}; }

const DivisorPair kQuadric(QDivisor(), D({{"1", "-1"}, {"-1", "-1"}}));
const DivisorPair kConic(D({{"0", "1/2"}}), D({{"0", "-1/2"}, {"1", "-1"}}));

}  // namespace

TEST_CASE("fiber_structure examples") {
    const FiberData q = fiber_structure(kQuadric, Rat(1));
    CHECK(q.m_plus == 1);
    CHECK(q.e_plus == 0);
    CHECK(q.m_minus == -1);
    CHECK(q.e_minus == 1);
    CHECK(q.degenerate);
    CHECK(q.pi_star == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(q.delta == 1);
    for (std::int64_t d = 1; d <= 6; ++d) {
        const FiberData f = fiber_structure(dihedral(d), Rat(0));
        CHECK(f.m_plus == 1);
        CHECK(f.e_plus == 0);
        CHECK(f.m_minus == -1);
        CHECK(f.e_minus == d);
        CHECK(f.delta == d);
    }
    for (std::int64_t d = 2; d <= 3; ++d)
        for (std::int64_t n = 2; n <= 3; ++n) CHECK_FALSE(fiber_structure(bertin(d, n), Rat(0)).degenerate);
}

TEST_CASE("fiber data reproduce the divisor values") {
    Gen g(51);
    for (int i = 0; i < 200; ++i) {
        const DivisorPair p = g.pair();
        const DivisorPair n = normalize_pair(p);
        for (const auto& a : n.support()) {
            const FiberData f = fiber_structure(p, a);
            CHECK(n.plus()(a) == Rat(-f.e_plus, f.m_plus));
            CHECK(n.minus()(a) == Rat(f.e_minus, f.m_minus));
            CHECK(f.m_plus > 0);
            CHECK(f.m_minus < 0);
            if (f.degenerate) CHECK(f.delta >= 1);
        }
    }
}

TEST_CASE("ruling_divisor examples") {
    const auto w2 = ruling_divisor(danielewski(2));
    REQUIRE(w2.size() == 2);
    CHECK(w2[0] == RulingComponent{Rat(-1), 1});
    CHECK(w2[1] == RulingComponent{Rat(0), 1});
    for (std::int64_t d = 1; d <= 5; ++d) {
        const auto r = ruling_divisor(dihedral(d));
        REQUIRE(r.size() == 1);
        CHECK(r[0] == RulingComponent{Rat(0), d});
    }
    CHECK(ruling_divisor(DivisorPair()).empty());
    try {
        ruling_divisor(reverse(danielewski(2)));
        FAIL("expected NoPositiveLnd");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoPositiveLnd);
    }
}

TEST_CASE("ruling multiplicities equal d+ * delta / m+") {
    Gen g(52);
    std::vector<DivisorPair> pairs;
    for (const auto& c : catalog_sample())
        if (const auto* h = std::get_if<Hyperbolic>(&c.spec)) pairs.push_back(h->pair);
    for (int i = 0; i < 150; ++i) pairs.push_back(g.pair());
    for (const auto& p : pairs) {
        if (!positive_lnd_exists(p)) continue;
        const std::int64_t dp = denom_index(normalize_pair(p).plus());
        for (const auto& c : ruling_divisor(p)) {
            const FiberData f = fiber_structure(p, c.point);
            CHECK(c.multiplicity >= 1);
            CHECK(c.multiplicity * f.m_plus == dp * f.delta);
        }
    }
}

TEST_CASE("singular_points examples") {
    for (std::int64_t d = 1; d <= 5; ++d)
        for (const auto& s : singular_points(danielewski(d))) CHECK(s.smooth);
    for (std::int64_t d = 2; d <= 3; ++d)
        for (std::int64_t n = 2; n <= 3; ++n) {
            const auto pts = singular_points(bertin(d, n));
            REQUIRE(pts.size() == 1);
            CHECK(pts[0].point == Rat(-1));
            CHECK(pts[0].smooth);
        }
    for (std::int64_t d = 2; d <= 6; ++d) {
        const auto pts = singular_points(dihedral(d));
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].point == Rat(0));
        CHECK(pts[0].order == d);
        CHECK_FALSE(pts[0].smooth);
        REQUIRE(pts[0].chart_type.has_value());
        CHECK(*pts[0].chart_type == QuotientType{d, 1});
    }
}

TEST_CASE("smoothness matches r | k in the integral chart") {
    for (std::int64_t k = 1; k <= 12; ++k)
        for (std::int64_t r = 1; r <= 12; ++r) {
            const Poly p = Poly::linear_power(Rat(0), r) * Poly::linear_power(Rat(1), 1);
            const auto pts = singular_points(from_equation(k, p));
            REQUIRE(pts.size() == 2);
            CHECK(pts[0].point == Rat(0));
            CHECK(pts[0].smooth == (k % r == 0));
            CHECK(pts[0].chart_valid);
            CHECK(pts[1].smooth);
        }
}

TEST_CASE("smoothness matches e' + a d = 1 in the fractional chart") {
    for (std::int64_t d = 1; d <= 12; ++d)
        for (std::int64_t ep = 0; ep < d; ++ep) {
            if (std::gcd(ep, d) != 1) continue;
            for (std::int64_t a = 0; a <= 6; ++a) {
                const DivisorPair p(QDivisor::point(Rat(0), Rat(-ep, d)), QDivisor::point(Rat(0), Rat(-a)));
                const auto pts = singular_points(p);
                if (ep == 0 && a == 0) {
                    CHECK(pts.empty());
                    continue;
                }
                REQUIRE(pts.size() == 1);
                CHECK(pts[0].order == d * a + ep);
                CHECK(pts[0].smooth == (d * a + ep == 1));
                CHECK(pts[0].chart_valid == (ep == 0));
            }
        }
}

TEST_CASE("ml_invariant examples") {
    CHECK(ml_invariant(Hyperbolic{danielewski(1)}).kind == MlKind::Trivial);
    for (std::int64_t d = 2; d <= 5; ++d)
        CHECK(ml_invariant(Hyperbolic{danielewski(d)}) == MlResult{MlKind::PolynomialRing, 1});
    for (std::int64_t d = 2; d <= 3; ++d)
        for (std::int64_t n = 2; n <= 3; ++n)
            CHECK(ml_invariant(Hyperbolic{bertin(d, n)}) == MlResult{MlKind::PolynomialRing, n});
    CHECK(ml_invariant(Elliptic(5, 2)).kind == MlKind::Trivial);
    CHECK(ml_invariant(Parabolic{D({{"0", "-2/5"}})}).kind == MlKind::Trivial);
    CHECK(ml_invariant(Parabolic{D({{"0", "-1/2"}, {"1", "-1/3"}})}).kind == MlKind::PolynomialRing);
    CHECK(ml_invariant(Hyperbolic{DivisorPair()}).kind == MlKind::LaurentRing);
    const DivisorPair spread(D({{"0", "-1/2"}, {"1", "-1/2"}}), D({{"0", "-1/2"}, {"1", "-1/2"}}));
    CHECK(ml_invariant(Hyperbolic{spread}).kind == MlKind::WholeRing);
}

TEST_CASE("mm_invariant examples") {
    CHECK(mm_invariant(Hyperbolic{kQuadric}) == 2);
    CHECK(mm_invariant(Hyperbolic{kConic}) == 4);
    for (std::int64_t h = 1; h <= 4; ++h) {
        const DivisorPair even(QDivisor::point(Rat(0), Rat(-1, h)), QDivisor::point(Rat(0), Rat(-1, h)));
        CHECK(mm_invariant(Hyperbolic{even}) == 2 * h);
    }
    CHECK_FALSE(mm_invariant(Hyperbolic{danielewski(2)}).has_value());
    CHECK(mm_invariant(Elliptic(7, 3)) == 7);
    CHECK(mm_invariant(Parabolic{D({{"0", "-2/5"}})}) == 5);
}

TEST_CASE("MM cross-check holds wherever ML is trivial") {
    Gen g(53);
    int seen = 0;
    for (int i = 0; i < 400; ++i) {
        const DivisorPair p = g.pair();
        if (ml_invariant(Hyperbolic{p}).kind != MlKind::Trivial) continue;
        ++seen;
        const MmCheck c = mm_cross_check(p);
        CHECK(c.consistent);
        CHECK(c.divisor_formula == *mm_invariant(Hyperbolic{p}));
        CHECK(c.presentation_degree.has_value());
    }
    CHECK(seen > 20);
}

TEST_CASE("recognize_sl2 examples") {
    CHECK(recognize_sl2(kQuadric) == Model{ModelKind::Quadric, 0});
    CHECK(recognize_sl2({QDivisor(), D({{"0", "-1"}, {"2", "-1"}})}) == Model{ModelKind::Quadric, 0});
    CHECK(recognize_sl2(kConic) == Model{ModelKind::ConicComplement, 0});
    CHECK_FALSE(recognize_sl2(danielewski(2)).has_value());
    CHECK(recognize_sl2({D({{"0", "-1/3"}}), D({{"0", "-1/3"}})}) == Model{ModelKind::VeroneseEven, 6});
    CHECK(recognize_sl2({D({{"0", "-2/3"}}), D({{"0", "1/3"}})}) == Model{ModelKind::VeroneseOdd, 3});
}

TEST_CASE("recognize_homogeneous examples") {
    CHECK(recognize_homogeneous(Hyperbolic{{QDivisor(), D({{"0", "-1"}})}}) == Model{ModelKind::A2, 0});
    for (std::int64_t d = 2; d <= 7; ++d)
        CHECK(recognize_homogeneous(Elliptic(d, 1)) == Model{ModelKind::VeroneseCone, d});
    for (std::int64_t d = 3; d <= 8; ++d) CHECK_FALSE(recognize_homogeneous(Hyperbolic{dihedral(d)}).has_value());
    CHECK(recognize_homogeneous(Hyperbolic{DivisorPair()}) == Model{ModelKind::LineCrossTorus, 0});
    CHECK(recognize_homogeneous(Hyperbolic{kConic}) == Model{ModelKind::ConicComplement, 0});
}

TEST_CASE("sl2 recognition implies trivial ML") {
    Gen g(54);
    for (int i = 0; i < 300; ++i) {
        const DivisorPair p = g.pair(2);
        if (recognize_sl2(p)) CHECK(ml_invariant(Hyperbolic{p}).kind == MlKind::Trivial);
    }
    for (const auto& c : catalog_sample()) {
        const auto mm = mm_invariant(c.spec);
        if (mm && *mm == 1) CHECK(recognize_homogeneous(c.spec) == Model{ModelKind::A2, 0});
    }
}

TEST_CASE("toric_type of hyperbolic one-point pairs") {
    for (std::int64_t d = 2; d <= 6; ++d) CHECK(toric_type(Hyperbolic{dihedral(d)}) == QuotientType{d, d - 1});
    CHECK_FALSE(toric_type(Hyperbolic{kQuadric}).has_value());
    CHECK(toric_type(Elliptic(5, 2)) == QuotientType{5, 2});
}

TEST_CASE("classify examples") {
    const ClassificationReport b = classify(Hyperbolic{bertin(2, 2)});
    CHECK(b.smooth);
    CHECK(b.ml.kind == MlKind::PolynomialRing);
    CHECK(b.positive.minimal_degree == 3);
    const ClassificationReport t = classify(Hyperbolic{DivisorPair()});
    CHECK(t.grading == "hyperbolic");
    CHECK(t.recognition == Model{ModelKind::LineCrossTorus, 0});
    CHECK(t.ml.kind == MlKind::LaurentRing);
    CHECK_FALSE(t.mm.has_value());
    const ClassificationReport e = classify(Elliptic(3, 2));
    CHECK(e.grading == "elliptic");
    CHECK(e.mm == 3);
    CHECK_FALSE(e.smooth);
    const ClassificationReport p = classify(Parabolic{D({{"0", "-2/5"}})});
    CHECK(p.grading == "parabolic");
    CHECK(p.fiber_lnd);
    CHECK(p.toric == QuotientType{5, 2});
}

TEST_CASE("reports are consistent: mm present iff ML trivial") {
    Gen g(55);
    for (int i = 0; i < 150; ++i) {
        const ClassificationReport r = classify(Hyperbolic{g.pair()});
        CHECK(r.mm.has_value() == (r.ml.kind == MlKind::Trivial));
        CHECK(r.mm_is_a2 == (r.mm && *r.mm == 1));
        bool smooth = true;
        for (const auto& s : r.singularities) smooth = smooth && s.smooth;
        CHECK(r.smooth == smooth);
    }
}

TEST_CASE("classification ignores shifts and translations") {
    Gen g(56);
    auto strip = [](Json j) {
        j.erase("input");
        return j.dump();
    };
    for (int i = 0; i < 60; ++i) {
        const DivisorPair p = g.pair();
        const DivisorPair q = p.transport(AffineMap::translation(g.rat(5, 3))).shift(g.integral_divisor());
        CHECK(strip(to_json(classify(Hyperbolic{p}))) == strip(to_json(classify(Hyperbolic{q}))));
    }
}
