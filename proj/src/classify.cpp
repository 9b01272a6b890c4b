#include "dpd/classify.hpp"

#include <algorithm>
#include <numeric>

namespace dpd {

namespace {

std::int64_t as_int(const Rat& r) { return r.to_int64(); }

// x, y with a*x + b*y = gcd(a, b) >= 0.
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_s, -old_t};
    return {old_s, old_t};
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

DivisorPair quadric_reference() {
    return {QDivisor(), QDivisor({{Rat(1), Rat(-1)}, {Rat(-1), Rat(-1)}})};
}

DivisorPair conic_reference() {
    return {QDivisor::point(Rat(0), Rat(1, 2)), QDivisor({{Rat(0), Rat(-1, 2)}, {Rat(1), Rat(-1)}})};
}

DivisorPair veronese_even_reference(std::int64_t half) {
    return {QDivisor::point(Rat(0), Rat(-1, half)), QDivisor::point(Rat(0), Rat(-1, half))};
}

DivisorPair veronese_odd_reference(std::int64_t d) {
    const std::int64_t ep = (d + 1) / 2;
    return {QDivisor::point(Rat(0), Rat(-ep, d)), QDivisor::point(Rat(0), Rat(ep - 1, d))};
}

// Parabolic data after removing integral parts: D(c) = -e'/d at one point.
struct ParabolicData {
    bool concentrated = false;
    std::int64_t d = 1;
    std::int64_t e_prime = 0;
};

ParabolicData parabolic_data(const QDivisor& divisor) {
    const QDivisor frac = divisor - ceil(divisor);
    ParabolicData out;
    out.concentrated = frac.terms().size() <= 1;
    out.d = denom_index(frac);
    if (out.concentrated && !frac.is_zero()) out.e_prime = as_int(-(Rat(out.d) * frac.terms().begin()->second));
    return out;
}

LndSummary summarize(const DivisorPair& pair) {
    LndSummary s;
    s.exists = positive_lnd_exists(pair);
    if (s.exists) {
        s.degrees = admissible_degrees(pair);
        s.minimal_degree = s.degrees->minimal_positive();
    }
    return s;
}

}  // namespace

FiberData fiber_structure(const DivisorPair& pair, const Rat& a) {
    const DivisorPair n = normalize_pair(pair);
    const Rat p = n.plus()(a);
    const Rat q = n.minus()(a);
    FiberData f;
    f.point = a;
    f.m_plus = to_int64(p.den());
    f.e_plus = -to_int64(p.num());
    f.m_minus = -to_int64(q.den());
    f.e_minus = -to_int64(q.num());
    f.degenerate = (p + q).sign() < 0;
    if (f.degenerate) {
        f.delta = f.m_plus * f.e_minus - f.m_minus * f.e_plus;
        f.pi_star = {f.m_plus, -f.m_minus};
        f.div_u = {-f.e_plus, f.e_minus};
    }
    return f;
}

std::vector<RulingComponent> ruling_divisor(const DivisorPair& pair) {
    if (!positive_lnd_exists(pair))
        throw Error(ErrorCode::NoPositiveLnd, "fractional part of D+ is supported at two or more points");
    const DivisorPair n = normalize_pair(pair);
    const std::int64_t d_plus = denom_index(n.plus());
    std::vector<RulingComponent> out;
    const QDivisor sum = n.sum();
    for (const auto& [a, s] : sum.terms()) {
        const FiberData f = fiber_structure(n, a);
        out.push_back({a, as_int(Rat(d_plus * f.m_minus) * s)});
    }
    return out;
}

std::vector<SingularityRecord> singular_points(const DivisorPair& pair) {
    const DivisorPair n = normalize_pair(pair);
    const std::int64_t k = denom_index(n.minus());
    std::vector<SingularityRecord> out;
    const QDivisor sum = n.sum();
    for (const auto& [a, s] : sum.terms()) {
        const FiberData f = fiber_structure(n, a);
        SingularityRecord rec;
        rec.point = a;
        rec.order = f.delta;
        rec.smooth = f.delta == 1;
        rec.chart_valid = n.plus()(a).is_zero();
        if (rec.chart_valid) {
            const std::int64_t r = as_int(-(Rat(k) * n.minus()(a)));
            const std::int64_t g = std::gcd(r, k);
            const std::int64_t di = r / g;
            rec.chart_type = QuotientType{di, (k / g) % di};
        }
        out.push_back(rec);
    }
    return out;
}

std::string ml_name(MlKind kind) {
    switch (kind) {
        case MlKind::Trivial: return "trivial";
        case MlKind::PolynomialRing: return "polynomial_ring";
        case MlKind::LaurentRing: return "laurent_ring";
        default: return "whole_ring";
    }
}

MlResult ml_invariant(const SurfaceSpec& spec) {
    if (std::holds_alternative<Elliptic>(spec)) return {};
    if (const auto* p = std::get_if<Parabolic>(&spec)) {
        if (parabolic_data(p->divisor).concentrated) return {};
        return {MlKind::PolynomialRing, 0};
    }
    const DivisorPair& pair = std::get<Hyperbolic>(spec).pair;
    if (pair.sum().is_zero()) return {MlKind::LaurentRing, 0};
    const bool plus = positive_lnd_exists(pair);
    const bool minus = positive_lnd_exists(reverse(pair));
    if (plus && minus) return {};
    if (plus) return {MlKind::PolynomialRing, denom_index(normalize_pair(pair).plus())};
    if (minus) return {MlKind::PolynomialRing, -denom_index(normalize_pair(reverse(pair)).plus())};
    return {MlKind::WholeRing, 0};
}

std::optional<std::int64_t> mm_invariant(const SurfaceSpec& spec) {
    if (ml_invariant(spec).kind != MlKind::Trivial) return std::nullopt;
    if (const auto* e = std::get_if<Elliptic>(&spec)) return e->d;
    if (const auto* p = std::get_if<Parabolic>(&spec)) return parabolic_data(p->divisor).d;
    const DivisorPair& pair = std::get<Hyperbolic>(spec).pair;
    return as_int(Rat(-denom_index(pair.plus()) * denom_index(pair.minus())) * pair.sum().degree());
}

MmCheck mm_cross_check(const DivisorPair& pair) {
    const DivisorPair n = normalize_pair(pair);
    const std::int64_t dp = denom_index(n.plus());
    const std::int64_t dm = denom_index(n.minus());
    MmCheck out;
    out.divisor_formula = as_int(Rat(-dp * dm) * n.sum().degree());
    if (positive_lnd_exists(n)) out.presentation_degree = presentation(n).p.degree();

    const std::int64_t k = std::gcd(dp, dm);
    Rat degree(0);
    bool integral = true;
    const QDivisor sum = n.sum();
    for (const auto& [a, s] : sum.terms()) {
        const Rat r = Rat(-k * (dp / k) * (dm / k)) * s;
        integral = integral && r.is_integer();
        degree += r;
    }
    if (integral) out.gcd_times_degree = as_int(Rat(k) * degree);

    out.consistent = (!out.presentation_degree || *out.presentation_degree == out.divisor_formula) &&
                     (!out.gcd_times_degree || *out.gcd_times_degree == out.divisor_formula);
    return out;
}

std::string Model::name() const {
    switch (kind) {
        case ModelKind::A2: return "A2";
        case ModelKind::LineCrossTorus: return "A1xC*";
        case ModelKind::Quadric: return "Quadric";
        case ModelKind::ConicComplement: return "ConicComplement";
        case ModelKind::VeroneseEven: return "VeroneseEven(" + std::to_string(parameter) + ")";
        case ModelKind::VeroneseOdd: return "VeroneseOdd(" + std::to_string(parameter) + ")";
        default: return "VeroneseCone(" + std::to_string(parameter) + ")";
    }
}

std::optional<Model> recognize_sl2(const DivisorPair& pair) {
    if (affine_equivalent(pair, quadric_reference())) return Model{ModelKind::Quadric, 0};
    if (affine_equivalent(pair, conic_reference())) return Model{ModelKind::ConicComplement, 0};
    const DivisorPair n = normalize_pair(pair);
    const auto support = n.support();
    if (support.size() != 1) return std::nullopt;
    const Rat s = n.sum()(support[0]);
    if (s.sign() >= 0) return std::nullopt;
    const Rat half = Rat(-2) / s;
    if (half.is_integer()) {
        const std::int64_t h = as_int(half);
        if (affine_equivalent(n, veronese_even_reference(h))) return Model{ModelKind::VeroneseEven, 2 * h};
    }
    const Rat odd = Rat(-1) / s;
    if (odd.is_integer() && as_int(odd) % 2 == 1) {
        const std::int64_t d = as_int(odd);
        if (affine_equivalent(n, veronese_odd_reference(d))) return Model{ModelKind::VeroneseOdd, d};
    }
    return std::nullopt;
}

std::optional<Model> recognize_homogeneous(const SurfaceSpec& spec) {
    if (const auto* e = std::get_if<Elliptic>(&spec)) {
        if (e->d == 1) return Model{ModelKind::A2, 0};
        if (e->e_prime == 1) return Model{ModelKind::VeroneseCone, e->d};
        return std::nullopt;
    }
    if (const auto* p = std::get_if<Parabolic>(&spec)) {
        const ParabolicData data = parabolic_data(p->divisor);
        if (!data.concentrated) return std::nullopt;
        if (data.d == 1) return Model{ModelKind::A2, 0};
        if (data.e_prime == 1) return Model{ModelKind::VeroneseCone, data.d};
        return std::nullopt;
    }
    const DivisorPair& pair = std::get<Hyperbolic>(spec).pair;
    if (is_line_cross_torus(pair)) return Model{ModelKind::LineCrossTorus, 0};
    const auto mm = mm_invariant(spec);
    if (!mm) return std::nullopt;
    if (*mm == 1) return Model{ModelKind::A2, 0};
    auto sl2 = recognize_sl2(pair);
    if (!sl2) return std::nullopt;
    if (sl2->kind == ModelKind::VeroneseEven || sl2->kind == ModelKind::VeroneseOdd)
        return Model{ModelKind::VeroneseCone, sl2->parameter};
    return sl2;
}

std::optional<QuotientType> toric_type(const SurfaceSpec& spec) {
    if (const auto* e = std::get_if<Elliptic>(&spec)) return QuotientType{e->d, e->e_prime};
    if (const auto* p = std::get_if<Parabolic>(&spec)) {
        const ParabolicData data = parabolic_data(p->divisor);
        if (!data.concentrated) return std::nullopt;
        return QuotientType{data.d, data.e_prime};
    }
    const DivisorPair n = normalize_pair(std::get<Hyperbolic>(spec).pair);
    const auto support = n.support();
    if (support.size() != 1 || n.sum().is_zero()) return std::nullopt;
    const FiberData f = fiber_structure(n, support[0]);
    const auto [p, q] = bezout(f.e_plus, f.m_plus);
    const std::int64_t x = p * f.e_minus + q * f.m_minus;
    return QuotientType{f.delta, floor_mod(x, f.delta)};
}

CanonicalFrame canonical_frame(const SurfaceSpec& spec) {
    auto anchor = [](const QDivisor& plus_frac, const std::vector<Rat>& support) {
        if (plus_frac.terms().size() == 1) return plus_frac.terms().begin()->first;
        if (support.empty()) return Rat(0);
        return support.back();
    };
    if (const auto* p = std::get_if<Parabolic>(&spec)) {
        const QDivisor n = p->divisor - ceil(p->divisor);
        const Rat offset = -anchor(n, n.support());
        return {Parabolic{n.transport(AffineMap::translation(offset))}, offset};
    }
    if (const auto* h = std::get_if<Hyperbolic>(&spec)) {
        const DivisorPair n = normalize_pair(h->pair);
        const Rat offset = -anchor(floor_frac(n.plus()).frac, n.support());
        return {Hyperbolic{n.transport(AffineMap::translation(offset))}, offset};
    }
    return {spec, Rat(0)};
}

ClassificationReport classify(const SurfaceSpec& spec) {
    const CanonicalFrame frame = canonical_frame(spec);
    ClassificationReport r;
    r.input = spec;
    r.translation = frame.offset;
    r.normalized = frame.spec;
    r.grading = grading_name(spec);
    r.ml = ml_invariant(frame.spec);
    r.mm = mm_invariant(frame.spec);
    r.mm_is_a2 = r.mm && *r.mm == 1;
    r.recognition = recognize_homogeneous(frame.spec);
    r.toric = toric_type(frame.spec);

    if (const auto* e = std::get_if<Elliptic>(&frame.spec)) {
        r.d_plus = e->d;
        r.d_minus = 0;
        r.positive.exists = true;
        r.negative.exists = true;
        if (e->d > 1) {
            r.singularities.push_back(
                {Rat(0), e->d, false, QuotientType{e->d, e->e_prime}, true});
        }
    } else if (const auto* p = std::get_if<Parabolic>(&frame.spec)) {
        const ParabolicData data = parabolic_data(p->divisor);
        r.d_plus = data.d;
        r.d_minus = 0;
        r.fiber_lnd = true;
        if (auto h = parabolic_horizontal(p->divisor)) {
            DegreeSet ds;
            ds.e0 = h->e0;
            ds.modulus = h->d;
            ds.e_min = 1;
            ds.zero_admissible = h->e0 == 0;
            r.positive.exists = true;
            r.positive.degrees = ds;
            r.positive.minimal_degree = ds.minimal_positive();
        }
        for (const auto& [a, c] : p->divisor.terms()) {
            const std::int64_t m = to_int64(c.den());
            r.singularities.push_back({a, m, m == 1, QuotientType{m, floor_mod(-to_int64(c.num()), m)}, true});
        }
    } else {
        const DivisorPair& pair = std::get<Hyperbolic>(frame.spec).pair;
        r.d_plus = denom_index(pair.plus());
        r.d_minus = denom_index(pair.minus());
        r.positive = summarize(pair);
        r.negative = summarize(reverse(pair));
        if (r.mm) r.mm_check = mm_cross_check(pair);
        if (r.positive.exists) {
            r.presentation = presentation(pair);
            r.ruling = ruling_divisor(pair);
        }
        for (const auto& a : pair.support()) r.fibers.push_back(fiber_structure(pair, a));
        r.singularities = singular_points(pair);
        r.sl2 = recognize_sl2(pair);
    }
    r.smooth = std::all_of(r.singularities.begin(), r.singularities.end(),
                           [](const SingularityRecord& s) { return s.smooth; });
    return r;
}

}  // namespace dpd
