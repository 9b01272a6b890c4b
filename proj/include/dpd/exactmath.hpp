#pragma once

// Exact arithmetic over the rationals: big rationals, dense univariate
// polynomials in t, and reduced rational functions.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpd/error.hpp"

namespace dpd {

using Integer = mpz_class;

/// Checked narrowing for degree-like quantities.
std::int64_t to_int64(const Integer& z);

class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den);
    Rat(const Integer& num, const Integer& den);
    explicit Rat(const Integer& v) : q_(v) {}
    explicit Rat(mpq_class q);

    /// Accepts "n" or "n/m" with an optional leading minus and no whitespace.
    static Rat parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Integer floor() const;
    Integer ceil() const;
    /// Value as int64 when integral; throws Overflow otherwise.
    std::int64_t to_int64() const;

    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_{0};
};

Rat pow(const Rat& base, std::int64_t exponent);
Rat abs(const Rat& r);

/// Dense polynomial in t over Q. Trailing zero coefficients are never kept,
/// so the zero polynomial has no coefficients at all.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coefficients);
    Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)
    Poly(int constant) : Poly(Rat(constant)) {}  // NOLINT

    static Poly t();
    static Poly monomial(const Rat& c, std::size_t exponent);
    /// (t - a)^m
    static Poly linear_power(const Rat& a, std::size_t m);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_unitary() const { return !c_.empty() && c_.back() == Rat(1); }
    const Rat& leading() const;
    Rat coeff(std::size_t exponent) const;
    const std::vector<Rat>& coefficients() const { return c_; }

    Rat operator()(const Rat& x) const;
    Poly derivative() const;
    Poly monic() const;
    /// p(x) -> p(x^k)
    Poly inflate(std::size_t k) const;
    /// p(t) -> p(t + shift)
    Poly translate(const Rat& shift) const;
    /// Multiplicity of a as a root (0 when p(a) != 0). Requires p != 0.
    std::size_t root_multiplicity(const Rat& a) const;
    /// Smallest power of t dividing p (0 for p(0) != 0). Requires p != 0.
    std::size_t t_adic_order() const;

    std::string str(std::string_view var = "t") const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim();
    std::vector<Rat> c_;
};

Poly pow(const Poly& base, std::size_t exponent);

/// Quotient and remainder of a by b over Q; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// num/den with gcd(num, den) = 1 and den unitary.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}  // NOLINT
    RatFunc(const Rat& c) : RatFunc(Poly(c)) {}        // NOLINT
    RatFunc(int c) : RatFunc(Poly(c)) {}               // NOLINT
    RatFunc(const Poly& num, const Poly& den);

    /// (t - a)^m for any integer m.
    static RatFunc linear_power(const Rat& a, std::int64_t m);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Order of vanishing at a (negative for poles). Requires a nonzero value.
    std::int64_t order_at(const Rat& a) const;
    RatFunc derivative() const;
    RatFunc inverse() const;
    /// f(t) -> f(t^k)
    RatFunc inflate(std::size_t k) const;
    /// f(t) -> f(t + shift)
    RatFunc translate(const Rat& shift) const;

    std::string str(std::string_view var = "t") const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    Poly num_;
    Poly den_;
};

RatFunc pow(const RatFunc& base, std::int64_t exponent);

/// Least e' in [0, d) with e*e' = 1 mod d; 0 when d = 1.
std::int64_t mod_inverse(std::int64_t e, std::int64_t d);

struct RootMultiplicity {
    Rat root;
    std::int64_t multiplicity;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// P = leading * prod (t - a_i)^{r_i} * remainder, remainder unitary without
/// rational roots, roots ascending.
struct LinearFactorization {
    Rat leading;
    std::vector<RootMultiplicity> roots;
    Poly remainder;

    Poly expand() const;
};

LinearFactorization rational_linear_factorization(const Poly& p);

}  // namespace dpd
