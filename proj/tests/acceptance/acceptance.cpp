// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "dpd/serialize.hpp"
#include "testkit.hpp"

using namespace testkit;

namespace {

using Failures = std::vector<std::string>;

class Recorder {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& a, const B& b, const std::string& what) {
        if (a == b) return;
        failures_.push_back(what);
    }
    Failures take() { return std::move(failures_); }

private:
    Failures failures_;
};

std::string str(std::int64_t x) { return std::to_string(x); }

DivisorPair danielewski(std::int64_t d) {
    return std::get<Hyperbolic>(catalog_surface("danielewski", {d}).spec).pair;
}

DivisorPair dihedral(std::int64_t d) { return std::get<Hyperbolic>(catalog_surface("dihedral", {d}).spec).pair; }

Failures danielewski_golden() {
    Recorder r;
    const Poly p = P({0, 1, 1});
    for (std::int64_t d = 1; d <= 6; ++d) {
        const std::string tag = "d=" + str(d) + ": ";
        const DivisorPair w = from_equation(d, p);
        r.equal(w.plus(), QDivisor(), tag + "D+ = 0");
        r.equal(w.minus(), QDivisor({{Rat(0), Rat(-1, d)}, {Rat(-1), Rat(-1, d)}}), tag + "D- = -(1/d)([0] + [-1])");
        const SurfaceSpec s = Hyperbolic{w};
        const MlResult ml = ml_invariant(s);
        if (d == 1) {
            r.equal(ml.kind, MlKind::Trivial, tag + "ML trivial");
            r.equal(recognize_sl2(w), std::optional<Model>(Model{ModelKind::Quadric, 0}), tag + "quadric");
            continue;
        }
        r.equal(ml.kind, MlKind::PolynomialRing, tag + "ML polynomial ring");
        r.equal(kernel_generator(s, build_horizontal(w, d)), tpow(0, 1), tag + "kernel generated by u");
        const DegreeSet ds = admissible_degrees(w);
        for (std::int64_t e = 0; e <= 30; ++e) r.equal(ds.contains(e), e >= d, tag + "degree " + str(e));
    }
    return r.take();
}

Failures bertin_golden() {
    Recorder r;
    for (std::int64_t d = 2; d <= 3; ++d)
        for (std::int64_t n = 2; n <= 3; ++n) {
            const std::string tag = "(d,n)=(" + str(d) + "," + str(n) + "): ";
            const DivisorPair b = std::get<Hyperbolic>(catalog_surface("bertin", {d, n}).spec).pair;
            const Presentation pr = presentation(b);
            r.equal(pr.k, n * (d - 1), tag + "k");
            r.equal(pr.p, Poly::monomial(Rat(1), n) + Poly(Rat(1)), tag + "P = s^n + 1");
            r.equal(pr.zd_weights, Presentation::Weights{1, n - 1, 0}, tag + "weights");
            r.equal(admissible_degrees(b).minimal_positive(), std::optional<std::int64_t>(n * d - 1), tag + "min degree");
            for (const auto& s : singular_points(b)) r.expect(s.smooth, tag + "smooth");
            r.equal(ml_invariant(Hyperbolic{b}).kind, MlKind::PolynomialRing, tag + "ML");
        }
    return r.take();
}

Failures sl2_recognition() {
    Recorder r;
    Gen g(1003);
    const std::vector<std::pair<DivisorPair, Model>> refs{
        {{QDivisor(), D({{"1", "-1"}, {"-1", "-1"}})}, {ModelKind::Quadric, 0}},
        {{D({{"0", "1/2"}}), D({{"0", "-1/2"}, {"1", "-1"}})}, {ModelKind::ConicComplement, 0}},
        {{D({{"0", "-1/2"}}), D({{"0", "-1/2"}})}, {ModelKind::VeroneseEven, 4}},
        {{D({{"0", "-2/3"}}), D({{"0", "1/3"}})}, {ModelKind::VeroneseOdd, 3}},
    };
    for (const auto& [pair, model] : refs) {
        r.equal(recognize_sl2(pair), std::optional<Model>(model), "reference " + to_text(Hyperbolic{pair}));
        for (int i = 0; i < 20; ++i) {
            const AffineMap m(Rat(g.integer(1, 4) * (g.coin() ? 1 : -1), g.integer(1, 3)), g.rat(5, 4));
            const DivisorPair q = pair.transport(m).shift(g.integral_divisor());
            r.equal(recognize_sl2(q), std::optional<Model>(model), "perturbed " + to_text(Hyperbolic{q}));
        }
    }
    int negatives = 0;
    while (negatives < 20) {
        const DivisorPair p = g.pair(4);
        if ((p.plus() + p.minus()).support().size() < 3) continue;
        ++negatives;
        r.expect(!recognize_sl2(p).has_value(), "non-template " + to_text(Hyperbolic{p}));
    }
    return r.take();
}

Failures mm_invariant_check() {
    Recorder r;
    auto hyper = [](const std::string& name, std::vector<std::int64_t> params) {
        return catalog_surface(name, params).spec;
    };
    r.equal(mm_invariant(hyper("quadric", {})), std::optional<std::int64_t>(2), "quadric");
    r.equal(mm_invariant(hyper("conic_complement", {})), std::optional<std::int64_t>(4), "conic complement");
    for (std::int64_t d = 1; d <= 8; ++d) {
        const SurfaceSpec s = hyper("veronese", {d});
        r.equal(mm_invariant(s), std::optional<std::int64_t>(d), "veronese " + str(d));
        r.equal(classify(s).mm_is_a2, d == 1, "veronese " + str(d) + " A2 flag");
    }
    for (auto [d, e] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 0}, {2, 1}, {3, 1}, {3, 2}, {5, 2}, {7, 3}}) {
        r.equal(mm_invariant(Parabolic{QDivisor::point(Rat(0), Rat(-e, d))}), std::optional<std::int64_t>(d),
                "parabolic toric " + str(d));
        r.equal(mm_invariant(hyper("toric", {d, e})), std::optional<std::int64_t>(d), "elliptic toric " + str(d));
    }
    std::vector<DivisorPair> pairs;
    for (const auto& c : catalog_sample())
        if (const auto* h = std::get_if<Hyperbolic>(&c.spec)) pairs.push_back(h->pair);
    Gen g(1004);
    for (int i = 0; i < 200; ++i) pairs.push_back(g.pair());
    for (const auto& p : pairs) {
        if (ml_invariant(Hyperbolic{p}).kind != MlKind::Trivial) continue;
        const MmCheck c = mm_cross_check(p);
        const std::string tag = to_text(Hyperbolic{p});
        r.expect(c.consistent, "cross-check " + tag);
        if (c.presentation_degree) {
            r.equal(c.gcd_times_degree, std::optional<std::int64_t>(c.divisor_formula), "k deg P " + tag);
            r.equal(*c.presentation_degree, c.divisor_formula, "deg P " + tag);
        }
    }
    return r.take();
}

Failures oracle_agreement() {
    Recorder r;
    std::vector<DivisorPair> pairs;
    for (const auto& c : catalog_sample())
        if (const auto* h = std::get_if<Hyperbolic>(&c.spec)) pairs.push_back(h->pair);
    const DivisorPair boundary(QDivisor(), D({{"0", "-3/2"}}));
    pairs.push_back(boundary);
    for (const auto& p : pairs)
        for (std::int64_t e = 0; e <= 10; ++e) {
            const bool closed = positive_lnd_exists(p) && admissible_degrees(p).contains(e);
            r.equal(stabilization_witness(p, e, 8).verdict, closed,
                    to_text(Hyperbolic{p}) + " at e=" + str(e));
        }
    r.expect(stabilization_witness(boundary, 1, 8).verdict, "boundary pair at e=1");
    r.expect(admissible_degrees(boundary).contains(1), "boundary pair admits e=1");
    return r.take();
}

std::pair<DivisorPair, std::int64_t> admissible(Gen& g) {
    for (;;) {
        const DivisorPair p = g.concentrated_pair();
        if (!positive_lnd_exists(p)) continue;
        const DegreeSet ds = admissible_degrees(p);
        std::vector<std::int64_t> es;
        for (std::int64_t e = 1; e <= 12; ++e)
            if (ds.contains(e)) es.push_back(e);
        if (es.empty()) continue;
        return {p, es[static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(es.size()) - 1))]};
    }
}

Failures nilpotency() {
    Recorder r;
    Gen g(1006);
    int cases = 0;
    while (cases < 200) {
        const auto [p, e] = admissible(g);
        const Horizontal h = build_horizontal(p, e);
        const SurfaceSpec spec = Hyperbolic{p};
        const std::int64_t a = g.integer(0, 12), b = g.integer(-6, 6);
        const GradedElement x = tpow(a, b);
        if (!contains(spec, x)) continue;
        ++cases;
        r.equal(nilpotency_steps(h, spec, x, 1000), h.d * a - h.e_prime * b + 1,
                to_text(spec) + " e=" + str(e) + " t^" + str(a) + " u^" + str(b));
    }
    auto euler = [](const GradedElement& x) {
        GradedElement out;
        for (const auto& [n, f] : x.terms()) out += GradedElement(f * RatFunc(Rat(n)), n);
        return out;
    };
    for (int i = 0; i < 500; ++i) {
        const auto [p, e] = admissible(g);
        const Lnd l = build_horizontal(p, e);
        const GradedElement x = g.element(2, 3), y = g.element(2, 3);
        const std::string tag = "pair " + str(i);
        r.equal(dpd::apply(l, x * y), dpd::apply(l, x) * y + x * dpd::apply(l, y), tag + " Leibniz");
        for (const auto& [n, f] : x.terms()) {
            const GradedElement img = dpd::apply(l, GradedElement(f, n));
            for (const auto& term : img.terms()) r.equal(term.first, n + e, tag + " homogeneity");
        }
        r.equal(euler(dpd::apply(l, x)) - dpd::apply(l, euler(x)), GradedElement(RatFunc(Rat(e))) * dpd::apply(l, x),
                tag + " Euler commutator");
    }
    return r.take();
}

Failures conjugation() {
    Recorder r;
    const Poly p = P({0, 1, 1});
    const GradedElement t = tpow(1);
    const GradedElement u_minus(RatFunc(p), -1);
    for (const Rat& alpha : {Rat(0), Rat(1), Rat(2), Rat(1, 2)}) {
        const std::string tag = "alpha=" + alpha.str();
        const GradedElement ua = conjugate_kernel(p, 1, alpha);
        const GradedElement expanded =
            u_minus + GradedElement(RatFunc(alpha)) * (GradedElement(RatFunc(Rat(2))) * t + tpow(0)) +
            GradedElement(RatFunc(alpha * alpha), 1);
        r.equal(ua, expanded, tag + " expansion");
        const GradedElement s = t + GradedElement(RatFunc(alpha), 1);
        r.equal(tpow(0, 1) * ua, s * s + s, tag + " u u_alpha = P(t + alpha u)");
        r.expect(contains(Hyperbolic{from_equation(1, p)}, ua), tag + " in ring");
    }
    return r.take();
}

Failures shift_invariance() {
    Recorder r;
    Gen g(1008);
    auto strip = [](Json j) {
        j.erase("input");
        return j.dump();
    };
    for (int i = 0; i < 100; ++i) {
        const DivisorPair p = g.pair();
        const DivisorPair q = p.transport(AffineMap::translation(g.rat(5, 3))).shift(g.integral_divisor());
        r.equal(strip(to_json(classify(Hyperbolic{p}))), strip(to_json(classify(Hyperbolic{q}))),
                to_text(Hyperbolic{p}) + " vs " + to_text(Hyperbolic{q}));
    }
    return r.take();
}

Failures singularities() {
    Recorder r;
    for (std::int64_t d = 1; d <= 8; ++d) {
        const auto pts = singular_points(dihedral(d));
        std::vector<std::int64_t> orders;
        for (const auto& s : pts)
            if (!s.smooth) orders.push_back(s.order);
        r.equal(orders, d == 1 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{d}, "dihedral " + str(d));
    }
    for (std::int64_t k = 1; k <= 12; ++k)
        for (std::int64_t ri = 1; ri <= 12; ++ri) {
            const Poly p = Poly::linear_power(Rat(0), ri) * Poly::linear_power(Rat(1), 1);
            const auto pts = singular_points(from_equation(k, p));
            const std::string tag = "(k,r)=(" + str(k) + "," + str(ri) + ")";
            r.expect(!pts.empty() && pts[0].point == Rat(0), tag + " fiber present");
            if (!pts.empty()) r.equal(pts[0].smooth, k % ri == 0, tag);
        }
    for (std::int64_t d = 1; d <= 12; ++d)
        for (std::int64_t ep = 0; ep < d; ++ep) {
            if (std::gcd(ep, d) != 1) continue;
            for (std::int64_t a = 0; a <= 6; ++a) {
                if (ep == 0 && a == 0) continue;
                const DivisorPair p(QDivisor::point(Rat(0), Rat(-ep, d)), QDivisor::point(Rat(0), Rat(-a)));
                const auto pts = singular_points(p);
                const std::string tag = "(d,e',a)=(" + str(d) + "," + str(ep) + "," + str(a) + ")";
                r.expect(pts.size() == 1, tag + " one fiber");
                if (pts.size() == 1) r.equal(pts[0].smooth, ep + a * d == 1, tag);
            }
        }
    return r.take();
}

Failures negative_results() {
    Recorder r;
    for (std::int64_t d = 3; d <= 10; ++d)
        r.expect(!recognize_homogeneous(Hyperbolic{dihedral(d)}).has_value(), "dihedral " + str(d));
    for (std::int64_t d = 2; d <= 10; ++d)
        r.expect(!positive_lnd_exists(reverse(danielewski(d))), "reverse danielewski " + str(d));
    return r.take();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Failures()>>> criteria{
        {"Danielewski golden", danielewski_golden},
        {"Bertin golden", bertin_golden},
        {"sl2 pair recognition", sl2_recognition},
        {"MM invariant", mm_invariant_check},
        {"oracle vs closed form", oracle_agreement},
        {"nilpotency and derivation laws", nilpotency},
        {"conjugation family", conjugation},
        {"shift invariance", shift_invariance},
        {"singularity suite", singularities},
        {"negative results", negative_results},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Failures f;
        try {
            f = criteria[i].second();
        } catch (const std::exception& e) {
            f.push_back(std::string("exception: ") + e.what());
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (ms >= 1000.0) f.push_back("took " + std::to_string(ms) + " ms (limit 1000)");
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << "criterion " << i + 1 << ": " << (f.empty() ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
             << ms << " ms)";
        std::cout << line.str() << "\n";
        for (std::size_t j = 0; j < f.size() && j < 5; ++j) std::cout << "    " << f[j] << "\n";
        if (f.size() > 5) std::cout << "    ... " << f.size() - 5 << " more\n";
        if (!f.empty()) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
