#include "dpd/lnd.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace dpd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Data of the normalized frame attached to the positive side of a grading.
struct Frame {
    std::int64_t d = 1;
    std::int64_t e_prime = 0;
    Rat center{0};
    bool has_center = false;
    RatFunc phi{1};
};

Frame frame_of(const QDivisor& plus) {
    const QDivisor shift = ceil(plus);
    const QDivisor normalized = plus - shift;
    Frame f;
    if (auto c = fractional_center(normalized)) {
        f.center = *c;
        f.has_center = true;
    }
    f.d = denom_index(normalized);
    f.e_prime = (-(Rat(f.d) * normalized(f.center))).to_int64();
    for (const auto& [p, s] : shift.terms()) f.phi *= RatFunc::linear_power(p, -s.to_int64());
    return f;
}

Horizontal make_horizontal(const Frame& f, std::int64_t e, Sign sign) {
    const std::int64_t a = e < 0 ? -e : e;
    Horizontal h;
    h.e = e;
    h.d = f.d;
    h.e_prime = f.e_prime;
    h.k = (a * f.e_prime - 1) / f.d;
    if (a * f.e_prime - 1 != h.k * f.d)
        throw Error(ErrorCode::InadmissibleDegree, "e*e' - 1 is not divisible by d");
    h.sign = sign;
    h.center = f.center;
    h.phi = f.phi;
    return h;
}

std::string int_str(std::int64_t v) { return std::to_string(v); }

// c t^p when f is a Laurent monomial
std::optional<std::pair<Rat, std::int64_t>> laurent_monomial(const RatFunc& f) {
    const auto& nc = f.num().coefficients();
    const auto& dc = f.den().coefficients();
    if (std::count_if(nc.begin(), nc.end(), [](const Rat& c) { return !c.is_zero(); }) != 1) return std::nullopt;
    if (std::count_if(dc.begin(), dc.end(), [](const Rat& c) { return !c.is_zero(); }) != 1) return std::nullopt;
    return std::pair{nc.back() / dc.back(), f.num().degree() - f.den().degree()};
}

GradedElement apply_horizontal(const Horizontal& h, const GradedElement& x) {
    const std::int64_t a = h.e < 0 ? -h.e : h.e;
    const bool flip = h.sign == Sign::Minus;
    const bool trivial_phi = h.phi == RatFunc(1);
    const Poly shifted_t = Poly::linear_power(h.center, 1);
    const Poly weight = Poly::linear_power(h.center, static_cast<std::size_t>(h.k < 0 ? -h.k : h.k));
    GradedElement out;
    for (const auto& [n, f] : x.terms()) {
        const std::int64_t m = flip ? -n : n;
        const std::int64_t target = m + a;
        if (trivial_phi && h.center.is_zero()) {
            if (const auto mono = laurent_monomial(f)) {
                const auto& [c, p] = *mono;
                const Rat coefficient = c * Rat(h.d * p - h.e_prime * m) * h.scale;
                out += GradedElement(RatFunc::linear_power(Rat(0), p + h.k) * RatFunc(coefficient),
                                     flip ? -target : target);
                continue;
            }
        }
        const RatFunc g = trivial_phi ? f : f * pow(h.phi, -m);
        const Poly& num = g.num();
        const Poly& den = g.den();
        // (d (t-c) g' - e' m g) (t-c)^k over a common denominator den^2
        const bool flat = den.degree() == 0;
        Poly top = shifted_t * (flat ? num.derivative() : num.derivative() * den - num * den.derivative());
        top *= Rat(h.d);
        Poly rest = flat ? num : num * den;
        rest *= Rat(h.e_prime * m);
        top -= rest;
        top *= h.scale;
        Poly bottom = flat ? den : den * den;
        if (h.k >= 0) {
            top *= weight;
        } else {
            bottom *= weight;
        }
        RatFunc image(top, bottom);
        if (!trivial_phi) image = image * pow(h.phi, target);
        out += GradedElement(image, flip ? -target : target);
    }
    return out;
}

GradedElement apply_fiber(const FiberType& fb, const GradedElement& x) {
    GradedElement out;
    for (const auto& [n, f] : x.terms()) out += GradedElement(RatFunc(Rat(n)) * fb.g * f, n - 1);
    return out;
}

GradedElement apply_toric(const EllipticToric& tor, const GradedElement& x) {
    GradedElement out;
    const RatFunc power = RatFunc::linear_power(Rat(0), tor.axis == Axis::X ? tor.exponent : 0);
    for (const auto& [n, f] : x.terms()) {
        if (tor.axis == Axis::X) {
            out += GradedElement(RatFunc(Rat(n)) * power * f, n - 1);
        } else {
            out += GradedElement(f.derivative(), n + tor.exponent);
        }
    }
    return out;
}

std::optional<Poly> deflate(const Poly& p, std::int64_t d) {
    const auto& c = p.coefficients();
    std::vector<Rat> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (static_cast<std::int64_t>(i) % d != 0) return std::nullopt;
        const std::size_t j = i / static_cast<std::size_t>(d);
        if (out.size() <= j) out.resize(j + 1);
        out[j] = c[i];
    }
    return Poly(out);
}

}  // namespace

std::int64_t lnd_degree(const Lnd& lnd) {
    return std::visit(Overloaded{[](const Horizontal& h) { return h.e; },
                                 [](const FiberType&) { return std::int64_t{-1}; },
                                 [](const EllipticToric& t) { return std::int64_t{t.axis == Axis::X ? -1 : 0}; }},
                      lnd);
}

std::string render(const Lnd& lnd) {
    return std::visit(
        Overloaded{
            [](const Horizontal& h) {
                const std::int64_t a = h.e < 0 ? -h.e : h.e;
                const std::string base = h.center.is_zero() ? "t" : "(t - " + h.center.str() + ")";
                std::string s = base + "^" + int_str(h.k) + " u^" + int_str(a) + " (" + int_str(h.d) + "·" +
                                base + "·d/dt − " + int_str(h.e_prime) + "·u·d/du) · " + h.scale.str();
                if (h.phi != RatFunc(1)) s += "  [u = (" + h.phi.inverse().str() + ")·u_normal]";
                if (h.sign == Sign::Minus) s += "  [grading reversed, u -> 1/u]";
                return s;
            },
            [](const FiberType& f) { return "(" + f.g.str() + ")·d/du"; },
            [](const EllipticToric& t) {
                return t.axis == Axis::X ? "X^" + int_str(t.exponent) + "·d/dY" : "Y^" + int_str(t.exponent) + "·d/dX";
            }},
        lnd);
}

bool DegreeSet::contains(std::int64_t e) const {
    if (empty) return false;
    if (e == 0) return zero_admissible;
    if (e < 0) return false;
    return e >= e_min && ((e - e0) % modulus + modulus) % modulus == 0;
}

std::optional<std::int64_t> DegreeSet::minimal_positive() const {
    if (empty) return std::nullopt;
    std::int64_t e = e_min;
    while (((e - e0) % modulus + modulus) % modulus != 0) ++e;
    return e;
}

DivisorPair reverse(const DivisorPair& pair) { return {pair.minus(), pair.plus()}; }

bool positive_lnd_exists(const DivisorPair& pair) {
    const auto frac = floor_frac(pair.plus()).frac;
    return frac.terms().size() <= 1;
}

DegreeSet admissible_degrees(const DivisorPair& pair) {
    const Frame f = frame_of(pair.plus());
    DegreeSet out;
    out.modulus = f.d;
    out.e0 = mod_inverse(f.e_prime, f.d);
    const QDivisor sum = pair.sum();
    std::int64_t e_min = 1;
    for (const auto& [a, s] : sum.terms()) {
        const bool at_center = f.has_center && a == f.center;
        const Rat bound = Rat(-1) / ((at_center ? Rat(f.d) : Rat(1)) * s);
        e_min = std::max<std::int64_t>(e_min, to_int64(bound.ceil()));
    }
    out.e_min = e_min;
    out.zero_admissible = f.d == 1 && sum.is_zero();
    return out;
}

std::optional<std::string> degree_obstruction(const DivisorPair& pair, std::int64_t e) {
    if (e < 0) {
        auto r = degree_obstruction(reverse(pair), -e);
        if (r) return "reversed grading: " + *r;
        return std::nullopt;
    }
    if (!positive_lnd_exists(pair)) return std::string("fractional part of D+ is supported at two or more points");
    const Frame f = frame_of(pair.plus());
    const QDivisor sum = pair.sum();
    if (e == 0) {
        if (f.d == 1 && sum.is_zero()) return std::nullopt;
        return std::string("degree 0 needs D+ integral and D+ + D- = 0");
    }
    if (((e * f.e_prime - 1) % f.d + f.d) % f.d != 0)
        return "congruence e*e' = 1 mod d fails for e = " + int_str(e) + ", e' = " + int_str(f.e_prime) +
               ", d = " + int_str(f.d);
    for (const auto& [a, s] : sum.terms()) {
        const bool at_center = f.has_center && a == f.center;
        const Rat need = at_center ? Rat(1, f.d) : Rat(1);
        if (Rat(-e) * s < need)
            return "bound -e*(D+(a) + D-(a)) >= " + need.str() + " fails at a = " + a.str() + " (value " +
                   (Rat(-e) * s).str() + ")";
    }
    return std::nullopt;
}

Horizontal build_horizontal(const DivisorPair& pair, std::int64_t e) {
    if (auto why = degree_obstruction(pair, e)) throw Error(ErrorCode::InadmissibleDegree, *why);
    if (e < 0) return make_horizontal(frame_of(pair.minus()), e, Sign::Minus);
    return make_horizontal(frame_of(pair.plus()), e, Sign::Plus);
}

GradedElement apply(const Lnd& lnd, const GradedElement& x) {
    return std::visit(Overloaded{[&](const Horizontal& h) { return apply_horizontal(h, x); },
                                 [&](const FiberType& f) { return apply_fiber(f, x); },
                                 [&](const EllipticToric& t) { return apply_toric(t, x); }},
                      lnd);
}

GradedElement apply_times(const Lnd& lnd, const GradedElement& x, std::size_t times) {
    GradedElement y = x;
    for (std::size_t i = 0; i < times && !y.is_zero(); ++i) y = dpd::apply(lnd, y);
    return y;
}

std::int64_t nilpotency_steps(const Lnd& lnd, const SurfaceSpec& spec, const GradedElement& x, std::int64_t cap) {
    if (!std::holds_alternative<Elliptic>(spec) && !contains(spec, x))
        throw Error(ErrorCode::NotInRing, x.str() + " is not in the ring");
    Lnd step = lnd;
    GradedElement y = x;
    if (const auto* h = std::get_if<Horizontal>(&lnd)) {
        // iterate in the normalized frame centred at 0
        Horizontal plain = *h;
        plain.phi = RatFunc(1);
        plain.center = Rat(0);
        y = GradedElement();
        for (const auto& [n, f] : x.terms()) {
            const std::int64_t m = h->sign == Sign::Minus ? -n : n;
            y += GradedElement((f * pow(h->phi, -m)).translate(h->center), n);
        }
        step = plain;
    }
    std::int64_t steps = 0;
    while (!y.is_zero()) {
        if (steps >= cap)
            throw Error(ErrorCode::CapExceeded, "not nilpotent within " + int_str(cap) + " applications");
        y = dpd::apply(step, y);
        ++steps;
    }
    return steps;
}

StabilizationReport stabilization_witness(const DivisorPair& input, std::int64_t e, std::int64_t window) {
    StabilizationReport report;
    const DivisorPair pair = e < 0 ? reverse(input) : input;
    const std::int64_t a = e < 0 ? -e : e;

    const DivisorPair normalized = normalize_pair(pair);
    std::optional<Rat> center;
    try {
        center = fractional_center(normalized.plus());
    } catch (const Error& err) {
        report.failures.push_back(err.detail());
        return report;
    }
    const DivisorPair p = normalized.transport(AffineMap::translation(-center.value_or(Rat(0))));
    const std::int64_t d = denom_index(p.plus());
    const std::int64_t ep = (-(Rat(d) * p.plus()(Rat(0)))).to_int64();
    const SurfaceSpec spec = Hyperbolic{p};

    // f(t) u^n = f(s^d) s^(-e' n) w^n on the cover; the candidate is w^a d/ds.
    auto image = [&](const RatFunc& f, std::int64_t n) -> std::optional<GradedElement> {
        const RatFunc lifted = f.inflate(static_cast<std::size_t>(d)) * RatFunc::linear_power(Rat(0), -ep * n);
        const RatFunc h = lifted.derivative() * RatFunc::linear_power(Rat(0), ep * (n + a));
        auto num = deflate(h.num(), d);
        auto den = deflate(h.den(), d);
        if (!num || !den) return std::nullopt;
        return GradedElement(RatFunc(*num, *den), n + a);
    };
    auto check = [&](const std::string& label, const RatFunc& f, std::int64_t n) {
        auto y = image(f, n);
        if (!y) {
            report.failures.push_back(label + ": image is not a function of t");
        } else if (!contains(spec, *y)) {
            report.failures.push_back(label + ": image " + y->str() + " is not in A");
        }
    };

    check("t", RatFunc(Poly::t()), 0);
    for (std::int64_t n = -window; n <= window; ++n) {
        const GradedElement g = graded_generator(spec, n);
        check("generator of degree " + int_str(n), g.coefficient(n), n);
    }
    report.verdict = report.failures.empty();
    return report;
}

GradedElement kernel_generator(const SurfaceSpec& spec, const Lnd& lnd) {
    return std::visit(
        Overloaded{[&](const Horizontal& h) -> GradedElement {
                       return GradedElement(graded_generator(spec, h.sign == Sign::Plus ? h.d : -h.d));
                   },
                   [](const FiberType&) -> GradedElement { return GradedElement(RatFunc(Poly::t())); },
                   [](const EllipticToric& t) -> GradedElement {
                       if (t.axis == Axis::X) return GradedElement(RatFunc(Poly::monomial(Rat(1), static_cast<std::size_t>(t.d))));
                       return GradedElement::u_power(t.d);
                   }},
        lnd);
}

FiberType fiber_lnd(const QDivisor& d) {
    FiberType out;
    for (const auto& [p, c] : d.terms()) out.g *= RatFunc::linear_power(p, to_int64(c.ceil()));
    return out;
}

std::optional<ParabolicDegrees> parabolic_horizontal(const QDivisor& d) {
    if (floor_frac(d).frac.terms().size() > 1) return std::nullopt;
    const Frame f = frame_of(d);
    return ParabolicDegrees{f.d, mod_inverse(f.e_prime, f.d)};
}

Horizontal build_parabolic_horizontal(const QDivisor& d, std::int64_t e) {
    const auto degrees = parabolic_horizontal(d);
    if (!degrees)
        throw Error(ErrorCode::InadmissibleDegree, "fractional part of D is supported at two or more points");
    if (e < 0) throw Error(ErrorCode::NegativeDegreeParabolic, "horizontal derivations here have degree >= 0");
    if (e % degrees->d != degrees->e0)
        throw Error(ErrorCode::InadmissibleDegree, "congruence e*e' = 1 mod d fails for e = " + int_str(e) +
                                                       ", d = " + int_str(degrees->d));
    return make_horizontal(frame_of(d), e, Sign::Plus);
}

std::pair<EllipticToric, EllipticToric> elliptic_lnd(std::int64_t d, std::int64_t e_prime) {
    if (d < 1 || e_prime < 0 || std::gcd(d, e_prime) != 1)
        throw Error(ErrorCode::NotSmallGroup,
                    "weights (1, " + int_str(e_prime) + ") mod " + int_str(d) + " do not define a small group");
    return {EllipticToric{d, e_prime % d, Axis::X}, EllipticToric{d, mod_inverse(e_prime, d), Axis::Y}};
}

bool elliptic_invariant(std::int64_t d, std::int64_t e_prime, const GradedElement& x) {
    for (const auto& [b, f] : x.terms()) {
        if (b < 0 || !f.is_polynomial()) return false;
        const auto& c = f.num().coefficients();
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (c[a].is_zero()) continue;
            if ((static_cast<std::int64_t>(a) + e_prime * b) % d != 0) return false;
        }
    }
    return true;
}

GradedElement conjugate_kernel(const Poly& p, std::int64_t e, const Rat& alpha) {
    GradedElement out;
    Poly derivative = p;
    Rat factor(1);
    for (std::int64_t j = 0; j <= p.degree(); ++j) {
        out += GradedElement(RatFunc(derivative * factor), j * e - 1);
        derivative = derivative.derivative();
        factor = factor * alpha / Rat(j + 1);
    }
    return out;
}

}  // namespace dpd
