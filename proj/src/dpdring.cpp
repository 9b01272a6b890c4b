#include "dpd/dpdring.hpp"

#include <numeric>

namespace dpd {

Elliptic::Elliptic(std::int64_t d_, std::int64_t e_prime_) : d(d_), e_prime(e_prime_) {
    if (d < 1 || e_prime < 0 || e_prime >= d)
        throw Error(ErrorCode::BadParams, "elliptic data needs 0 <= e' < d");
    if (std::gcd(d, e_prime) != 1)
        throw Error(ErrorCode::BadParams,
                    "elliptic data needs gcd(e', d) = 1, got (" + std::to_string(d) + ", " +
                        std::to_string(e_prime) + ")");
}

std::string grading_name(const SurfaceSpec& spec) {
    switch (spec.index()) {
        case 0: return "elliptic";
        case 1: return "parabolic";
        default: return "hyperbolic";
    }
}

// ---------------------------------------------------------------- GradedElement

GradedElement::GradedElement(const RatFunc& f, std::int64_t n) { add(n, f); }

void GradedElement::add(std::int64_t n, const RatFunc& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
        terms_.emplace(n, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

RatFunc GradedElement::coefficient(std::int64_t n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? RatFunc() : it->second;
}

GradedElement GradedElement::euler() const {
    GradedElement out;
    for (const auto& [n, f] : terms_) out.add(n, f * RatFunc(Rat(n)));
    return out;
}

namespace {

// Sign and magnitude text of a graded coefficient.
std::pair<int, std::string> coefficient_text(const RatFunc& f) {
    const auto& num = f.num().coefficients();
    std::size_t nonzero = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < num.size(); ++i)
        if (!num[i].is_zero()) {
            ++nonzero;
            at = i;
        }
    if (f.is_polynomial() && nonzero == 1) {
        return {num[at].sign(), Poly::monomial(abs(num[at]), at).str()};
    }
    std::string body = "(" + f.num().str() + ")";
    if (!f.is_polynomial()) body += "/(" + f.den().str() + ")";
    return {1, body};
}

}  // namespace

std::string GradedElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [n, f] : terms_) {
        auto [sign, body] = coefficient_text(f);
        if (n != 0) body = (body == "1" ? std::string() : body + "*") + (n == 1 ? std::string("u") : "u^" + std::to_string(n));
        if (out.empty()) {
            out = (sign < 0 ? "-" : "") + body;
        } else {
            out += (sign < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

GradedElement GradedElement::operator-() const {
    GradedElement out = *this;
    for (auto& kv : out.terms_) kv.second = -kv.second;
    return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
    for (const auto& [n, f] : o.terms_) add(n, f);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
    for (const auto& [n, f] : o.terms_) add(n, -f);
    return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
    GradedElement out;
    for (const auto& [m, f] : a.terms_)
        for (const auto& [n, g] : b.terms_) out.add(m + n, f * g);
    return out;
}

GradedElement pow(const GradedElement& x, std::size_t n) {
    GradedElement result(RatFunc(1));
    for (std::size_t i = 0; i < n; ++i) result = result * x;
    return result;
}

// ---------------------------------------------------------------- ring structure

namespace {

// The divisor governing degree n (D+ for n >= 0, D- for n < 0).
const QDivisor& governing_divisor(const SurfaceSpec& spec, std::int64_t n) {
    if (const auto* h = std::get_if<Hyperbolic>(&spec)) return n >= 0 ? h->pair.plus() : h->pair.minus();
    if (const auto* p = std::get_if<Parabolic>(&spec)) {
        if (n < 0)
            throw Error(ErrorCode::NegativeDegreeParabolic,
                        "parabolic ring has no piece of degree " + std::to_string(n));
        return p->divisor;
    }
    throw Error(ErrorCode::UnsupportedSpec, "elliptic specs are not DPD rings over Q[t]");
}

}  // namespace

GradedElement graded_generator(const SurfaceSpec& spec, std::int64_t n) {
    const QDivisor& d = governing_divisor(spec, n);
    const Rat m(n >= 0 ? n : -n);
    RatFunc f(1);
    for (const auto& [p, c] : d.terms()) {
        Rat ex((-(m * c)).ceil());
        f *= RatFunc::linear_power(p, ex.to_int64());
    }
    return {f, n};
}

bool contains(const SurfaceSpec& spec, const GradedElement& x) {
    if (std::holds_alternative<Elliptic>(spec))
        throw Error(ErrorCode::UnsupportedSpec, "membership is defined for parabolic and hyperbolic specs");
    for (const auto& [n, f] : x.terms()) {
        if (n < 0 && std::holds_alternative<Parabolic>(spec)) return false;
        const QDivisor& d = governing_divisor(spec, n);
        const Rat m(n >= 0 ? n : -n);
        std::vector<Rat> points = d.support();
        if (!f.is_polynomial()) {
            auto fac = rational_linear_factorization(f.den());
            if (fac.remainder.degree() > 0)
                throw Error(ErrorCode::IrrationalLocus,
                            "denominator " + f.den().str() + " has poles outside Q");
            for (const auto& r : fac.roots) points.push_back(r.root);
        }
        for (const auto& p : points) {
            if (Rat(f.order_at(p)) + m * d(p) < Rat(0)) return false;
        }
    }
    return true;
}

bool is_line_cross_torus(const DivisorPair& pair) { return pair.sum().is_zero(); }

std::optional<Rat> fractional_center(const QDivisor& plus) {
    std::optional<Rat> center;
    for (const auto& [a, c] : plus.terms()) {
        if (c.is_integer()) continue;
        if (center)
            throw Error(ErrorCode::FractionalPlusSpread,
                        "fractional part is supported at " + center->str() + " and " + a.str());
        center = a;
    }
    return center;
}

Presentation presentation(const DivisorPair& pair) {
    const DivisorPair normalized = normalize_pair(pair);
    Presentation out;
    out.center = fractional_center(normalized.plus()).value_or(Rat(0));
    const DivisorPair p = normalized.transport(AffineMap::translation(-out.center));

    out.d = denom_index(p.plus());
    out.e_prime = (-(Rat(out.d) * p.plus()(Rat(0)))).to_int64();
    out.k = denom_index(p.minus());
    out.l = (-(Rat(out.k) * p.minus()(Rat(0)))).to_int64();

    out.q = Poly(Rat(1));
    for (const auto& [a, c] : p.minus().terms()) {
        if (a.is_zero()) continue;
        const std::int64_t r = (-(Rat(out.k) * c)).to_int64();
        out.q *= Poly::linear_power(a, static_cast<std::size_t>(r));
    }
    const std::int64_t t_power = out.k * out.e_prime + out.d * out.l;
    out.p = out.q.inflate(static_cast<std::size_t>(out.d)) * Poly::monomial(Rat(1), static_cast<std::size_t>(t_power));
    out.zd_weights = {1, out.e_prime, 0};
    return out;
}

DivisorPair from_equation(std::int64_t k, const Poly& p) {
    if (k < 1) throw Error(ErrorCode::BadParams, "exponent k must be positive");
    if (p.is_zero() || p.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "P must be nonconstant");
    if (!p.is_unitary()) throw Error(ErrorCode::NotUnitary, "P = " + p.str() + " is not unitary");
    const auto fac = rational_linear_factorization(p);
    if (fac.remainder.degree() > 0)
        throw Error(ErrorCode::NonRationalRoots, "P has the factor " + fac.remainder.str() + " without rational roots");
    std::int64_t g = k;
    for (const auto& r : fac.roots) g = std::gcd(g, r.multiplicity);
    if (g > 1)
        throw Error(ErrorCode::GcdViolation,
                    "gcd(k, r_1, ..., r_s) = " + std::to_string(g) + "; k is not minimal");
    std::vector<std::pair<Rat, Rat>> minus;
    for (const auto& r : fac.roots) minus.emplace_back(r.root, Rat(-r.multiplicity, k));
    return {QDivisor(), QDivisor(minus)};
}

}  // namespace dpd
