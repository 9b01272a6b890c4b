#pragma once

// The graded ring A = A0[D] or A0[D+, D-] inside Frac(A0)[u, 1/u], with
// A0 = Q[t]. Every graded piece is free of rank one over A0, so a piece is
// represented by its generator alone.

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "dpd/divisor.hpp"
#include "dpd/exactmath.hpp"

namespace dpd {

/// Toric surface V_{d,e'} = A^2 / Z_d with weights (1, e').
struct Elliptic {
    std::int64_t d = 1;
    std::int64_t e_prime = 0;
    Elliptic() = default;
    Elliptic(std::int64_t d, std::int64_t e_prime);
    friend bool operator==(const Elliptic&, const Elliptic&) = default;
};

struct Parabolic {
    QDivisor divisor;
    friend bool operator==(const Parabolic&, const Parabolic&) = default;
};

struct Hyperbolic {
    DivisorPair pair;
    friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

using SurfaceSpec = std::variant<Elliptic, Parabolic, Hyperbolic>;

std::string grading_name(const SurfaceSpec& spec);

/// Finite sum of f_n(t) u^n, no zero coefficients stored.
class GradedElement {
public:
    GradedElement() = default;
    GradedElement(const RatFunc& f, std::int64_t n = 0);  // NOLINT(google-explicit-constructor)
    static GradedElement u_power(std::int64_t n) { return {RatFunc(1), n}; }

    const std::map<std::int64_t, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFunc coefficient(std::int64_t n) const;
    bool is_homogeneous() const { return terms_.size() <= 1; }

    /// Euler derivation: f u^n -> n f u^n.
    GradedElement euler() const;
    /// Render using the element grammar (parse(str(x)) == x).
    std::string str() const;

    GradedElement operator-() const;
    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
    friend bool operator==(const GradedElement&, const GradedElement&) = default;

private:
    void add(std::int64_t n, const RatFunc& f);
    std::map<std::int64_t, RatFunc> terms_;
};

GradedElement pow(const GradedElement& x, std::size_t n);

/// Generator of A_n over A0: prod (t - p)^ceil(-|n| D(p)), D = D+ or D-.
GradedElement graded_generator(const SurfaceSpec& spec, std::int64_t n);

/// Membership of x in A. Throws IrrationalLocus when a coefficient has a
/// pole outside Q.
bool contains(const SurfaceSpec& spec, const GradedElement& x);

/// True iff D+ + D- = 0, i.e. the surface is A^1 x C*.
bool is_line_cross_torus(const DivisorPair& pair);

/// u^k v = P(s) with P(s) = Q(s^d) s^(k e' + d l), the Z_d cover acting by
/// weights (1, e', 0) on (s, u, v).
struct Presentation {
    std::int64_t k = 1;
    Poly p;
    std::int64_t d = 1;
    std::int64_t e_prime = 0;
    std::int64_t l = 0;
    Poly q;
    struct Weights {
        std::int64_t s = 0;
        std::int64_t u = 0;
        std::int64_t v = 0;
        friend bool operator==(const Weights&, const Weights&) = default;
    } zd_weights;
    /// Point moved to 0 before reading off the data.
    Rat center;
    friend bool operator==(const Presentation&, const Presentation&) = default;
};

Presentation presentation(const DivisorPair& pair);

/// DPD pair (0, -div(P)/k) of the normalization of Q[t,u,v]/(u^k v - P).
DivisorPair from_equation(std::int64_t k, const Poly& p);

/// Fractional support point of normalized D+ (nullopt when D+ is integral).
/// Throws FractionalPlusSpread for two or more points.
std::optional<Rat> fractional_center(const QDivisor& plus);

}  // namespace dpd
