#pragma once

// Q-divisors on the affine line and the divisor pairs (D+, D-) that present
// hyperbolic C*-surfaces.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dpd/exactmath.hpp"

namespace dpd {

/// A rational point of the affine line.
struct Point {
    Rat coordinate;
    friend auto operator<=>(const Point& a, const Point& b) {
        if (a.coordinate < b.coordinate) return std::strong_ordering::less;
        if (b.coordinate < a.coordinate) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Point&, const Point&) = default;
};

/// a -> scale * a + offset, scale != 0.
class AffineMap {
public:
    AffineMap() = default;
    AffineMap(Rat scale, Rat offset);
    static AffineMap translation(const Rat& offset) { return {Rat(1), offset}; }

    const Rat& scale() const { return scale_; }
    const Rat& offset() const { return offset_; }
    Rat operator()(const Rat& a) const { return scale_ * a + offset_; }
    AffineMap inverse() const;
    friend bool operator==(const AffineMap&, const AffineMap&) = default;

private:
    Rat scale_{1};
    Rat offset_{0};
};

class QDivisor {
public:
    QDivisor() = default;
    /// Duplicate points are summed; zero coefficients dropped.
    explicit QDivisor(const std::vector<std::pair<Rat, Rat>>& terms);
    static QDivisor point(const Rat& a, const Rat& coefficient);

    Rat operator()(const Rat& a) const;
    const std::map<Rat, Rat>& terms() const { return terms_; }
    std::vector<Rat> support() const;
    bool is_zero() const { return terms_.empty(); }
    Rat degree() const;
    bool is_integral() const;

    /// Push forward along g: the coefficient at a moves to g(a).
    QDivisor transport(const AffineMap& g) const;

    QDivisor operator-() const;
    QDivisor& operator+=(const QDivisor& o);
    QDivisor& operator-=(const QDivisor& o);
    friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
    friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
    friend QDivisor operator*(const Rat& c, const QDivisor& d);
    friend bool operator==(const QDivisor&, const QDivisor&) = default;

private:
    void set(const Rat& a, const Rat& c);
    std::map<Rat, Rat> terms_;
};

/// Least d >= 1 making d*D integral.
std::int64_t denom_index(const QDivisor& d);

struct FloorFrac {
    QDivisor floor;
    QDivisor frac;
};
FloorFrac floor_frac(const QDivisor& d);
/// Pointwise ceiling (an integral divisor).
QDivisor ceil(const QDivisor& d);

/// (D+, D-) with D+(a) + D-(a) <= 0 everywhere; construction enforces it.
class DivisorPair {
public:
    DivisorPair() = default;
    DivisorPair(QDivisor plus, QDivisor minus);

    const QDivisor& plus() const { return plus_; }
    const QDivisor& minus() const { return minus_; }
    QDivisor sum() const { return plus_ + minus_; }
    /// Union of both supports, ascending.
    std::vector<Rat> support() const;

    DivisorPair transport(const AffineMap& g) const;
    /// (D+ + S, D- - S) for an integral divisor S.
    DivisorPair shift(const QDivisor& s) const;

    friend bool operator==(const DivisorPair&, const DivisorPair&) = default;

private:
    QDivisor plus_;
    QDivisor minus_;
};

/// (D+ - ceil(D+), D- + ceil(D+)): coefficients of D+ end up in (-1, 0].
DivisorPair normalize_pair(const DivisorPair& p);
bool shift_equivalent(const DivisorPair& p1, const DivisorPair& p2);
/// Some g with shift_equivalent(g . p1, p2), if any exists.
std::optional<AffineMap> affine_equivalent(const DivisorPair& p1, const DivisorPair& p2);

}  // namespace dpd
