#include "dpd/catalog.hpp"

#include <numeric>

namespace dpd {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::BadParams, what);
}

void arity(const std::string& name, const std::vector<std::int64_t>& params, std::size_t n) {
    require(params.size() == n, name + " takes " + std::to_string(n) + " parameter(s), got " +
                                    std::to_string(params.size()));
}

std::string veronese_cone(std::int64_t d) { return d == 1 ? "A2" : "VeroneseCone(" + std::to_string(d) + ")"; }

std::string model_text(const std::optional<Model>& m) { return m ? m->name() : "none"; }

std::string orders_text(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"danielewski", "bertin",   "veronese", "quadric",
                                                   "conic_complement", "dihedral", "toric"};
    return names;
}

CatalogEntry catalog_surface(const std::string& name, const std::vector<std::int64_t>& params) {
    CatalogEntry c;
    c.name = name;
    c.params = params;
    ExpectedFacts& x = c.expected;

    if (name == "danielewski") {
        arity(name, params, 1);
        const std::int64_t d = params[0];
        require(d >= 1, "danielewski needs d >= 1");
        c.spec = Hyperbolic{{QDivisor(), QDivisor({{Rat(0), Rat(-1, d)}, {Rat(-1), Rat(-1, d)}})}};
        x.smooth = true;
        x.ml = d >= 2 ? MlResult{MlKind::PolynomialRing, 1} : MlResult{};
        x.minimal_degree = d;
        x.presentation_k = d;
        x.presentation_p = Poly({Rat(0), Rat(1), Rat(1)});
        x.presentation_d = 1;
        x.presentation_e_prime = 0;
        x.singular_orders = std::vector<std::int64_t>{1, 1};
        if (d == 1) {
            x.sl2 = "Quadric";
            x.recognition = "Quadric";
            x.mm = 2;
        } else {
            x.sl2 = "none";
            x.recognition = "none";
        }
    } else if (name == "bertin") {
        arity(name, params, 2);
        const std::int64_t d = params[0];
        const std::int64_t n = params[1];
        require(d >= 2 && n >= 2, "bertin needs d >= 2 and n >= 2");
        c.spec = Hyperbolic{{QDivisor::point(Rat(0), Rat(1, n)),
                             QDivisor({{Rat(0), Rat(-1, n)}, {Rat(-1), Rat(-1, n * (d - 1))}})}};
        x.smooth = true;
        x.ml = MlResult{MlKind::PolynomialRing, n};
        x.minimal_degree = n * d - 1;
        x.presentation_k = n * (d - 1);
        x.presentation_p = Poly::monomial(Rat(1), static_cast<std::size_t>(n)) + Poly(Rat(1));
        x.presentation_d = n;
        x.presentation_e_prime = n - 1;
        x.singular_orders = std::vector<std::int64_t>{1};
    } else if (name == "veronese") {
        arity(name, params, 1);
        const std::int64_t d = params[0];
        require(d >= 1, "veronese needs d >= 1");
        if (d % 2 == 0) {
            const std::int64_t h = d / 2;
            c.spec = Hyperbolic{{QDivisor::point(Rat(0), Rat(-1, h)), QDivisor::point(Rat(0), Rat(-1, h))}};
            x.sl2 = "VeroneseEven(" + std::to_string(d) + ")";
        } else {
            const std::int64_t ep = (d + 1) / 2;
            c.spec = Hyperbolic{{QDivisor::point(Rat(0), Rat(ep - 1, d)), QDivisor::point(Rat(0), Rat(-ep, d))}};
            x.sl2 = "VeroneseOdd(" + std::to_string(d) + ")";
        }
        x.ml = MlResult{};
        x.mm = d;
        x.recognition = veronese_cone(d);
        x.smooth = d == 1;
    } else if (name == "quadric") {
        arity(name, params, 0);
        c.spec = Hyperbolic{{QDivisor(), QDivisor({{Rat(1), Rat(-1)}, {Rat(-1), Rat(-1)}})}};
        x.smooth = true;
        x.ml = MlResult{};
        x.mm = 2;
        x.sl2 = "Quadric";
        x.recognition = "Quadric";
        x.presentation_k = 1;
        // t^2 - 1 after the root 1 moves to 0
        x.presentation_p = Poly({Rat(0), Rat(2), Rat(1)});
    } else if (name == "conic_complement") {
        arity(name, params, 0);
        c.spec = Hyperbolic{{QDivisor::point(Rat(0), Rat(1, 2)), QDivisor({{Rat(0), Rat(-1, 2)}, {Rat(1), Rat(-1)}})}};
        x.smooth = true;
        x.ml = MlResult{};
        x.mm = 4;
        x.sl2 = "ConicComplement";
        x.recognition = "ConicComplement";
    } else if (name == "dihedral") {
        arity(name, params, 1);
        const std::int64_t d = params[0];
        require(d >= 1, "dihedral needs d >= 1");
        c.spec = Hyperbolic{{QDivisor(), QDivisor::point(Rat(0), Rat(-d))}};
        x.smooth = d == 1;
        x.ml = MlResult{};
        x.mm = d;
        x.singular_orders = std::vector<std::int64_t>{d};
        x.presentation_k = 1;
        x.presentation_p = Poly::monomial(Rat(1), static_cast<std::size_t>(d));
        x.recognition = d >= 3 ? "none" : veronese_cone(d);
    } else if (name == "toric") {
        arity(name, params, 2);
        const std::int64_t d = params[0];
        const std::int64_t ep = params[1];
        require(d >= 1 && ep >= 0 && ep < d && std::gcd(d, ep) == 1, "toric needs 0 <= e' < d coprime");
        c.spec = Elliptic(d, ep);
        x.ml = MlResult{};
        x.mm = d;
        x.smooth = d == 1;
        if (d == 1) {
            x.recognition = "A2";
        } else if (ep == 1) {
            x.recognition = veronese_cone(d);
        }
    } else {
        throw Error(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
    }
    return c;
}

std::vector<std::string> check_expected(const CatalogEntry& entry, const ClassificationReport& r) {
    std::vector<std::string> bad;
    const ExpectedFacts& x = entry.expected;
    auto mismatch = [&](const std::string& field, const std::string& want, const std::string& got) {
        bad.push_back(field + ": expected " + want + ", got " + got);
    };
    if (x.smooth && *x.smooth != r.smooth) mismatch("smooth", *x.smooth ? "true" : "false", r.smooth ? "true" : "false");
    if (x.ml && !(*x.ml == r.ml))
        mismatch("ml", ml_name(x.ml->kind) + "/" + std::to_string(x.ml->generator_degree),
                 ml_name(r.ml.kind) + "/" + std::to_string(r.ml.generator_degree));
    if (x.mm && r.mm != x.mm) mismatch("mm", std::to_string(*x.mm), r.mm ? std::to_string(*r.mm) : "none");
    if (x.minimal_degree && r.positive.minimal_degree != x.minimal_degree)
        mismatch("minimal_degree", std::to_string(*x.minimal_degree),
                 r.positive.minimal_degree ? std::to_string(*r.positive.minimal_degree) : "none");
    const bool wants_presentation = x.presentation_k || x.presentation_p || x.presentation_d || x.presentation_e_prime;
    if (wants_presentation && !r.presentation) {
        mismatch("presentation", "present", "absent");
    } else if (r.presentation) {
        const Presentation& p = *r.presentation;
        if (x.presentation_k && *x.presentation_k != p.k)
            mismatch("presentation.k", std::to_string(*x.presentation_k), std::to_string(p.k));
        if (x.presentation_p && *x.presentation_p != p.p)
            mismatch("presentation.P", x.presentation_p->str("s"), p.p.str("s"));
        if (x.presentation_d && *x.presentation_d != p.d)
            mismatch("presentation.d", std::to_string(*x.presentation_d), std::to_string(p.d));
        if (x.presentation_e_prime && *x.presentation_e_prime != p.e_prime)
            mismatch("presentation.e_prime", std::to_string(*x.presentation_e_prime), std::to_string(p.e_prime));
    }
    if (x.recognition && *x.recognition != model_text(r.recognition))
        mismatch("recognition", *x.recognition, model_text(r.recognition));
    if (x.sl2 && *x.sl2 != model_text(r.sl2)) mismatch("sl2", *x.sl2, model_text(r.sl2));
    if (x.singular_orders) {
        std::vector<std::int64_t> got;
        for (const auto& s : r.singularities) got.push_back(s.order);
        if (got != *x.singular_orders) mismatch("singular_orders", orders_text(*x.singular_orders), orders_text(got));
    }
    return bad;
}

}  // namespace dpd
