#pragma once

// Homogeneous locally nilpotent derivations: existence, closed-form
// construction, symbolic application, and a brute-force stabilization check.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dpd/divisor.hpp"
#include "dpd/dpdring.hpp"
#include "dpd/exactmath.hpp"

namespace dpd {

enum class Sign { Plus, Minus };

/// t^k u^e (d t d/dt - e' u d/du) * scale, written in the normalized frame
/// centred at `center`. An input-frame element f u^m is first rewritten as
/// (f phi^-m) u'^m with u' = phi u. With Sign::Minus the same formula runs in
/// the reversed grading.
struct Horizontal {
    std::int64_t e = 1;
    std::int64_t d = 1;
    std::int64_t e_prime = 0;
    std::int64_t k = -1;
    Sign sign = Sign::Plus;
    Rat scale{1};
    Rat center{0};
    RatFunc phi{1};
    friend bool operator==(const Horizontal&, const Horizontal&) = default;
};

/// f u^n -> n g f u^(n-1).
struct FiberType {
    RatFunc g{1};
    friend bool operator==(const FiberType&, const FiberType&) = default;
};

enum class Axis { X, Y };

/// Axis X: X^exponent d/dY. Axis Y: Y^exponent d/dX. Elements of Q[X, Y]
/// are carried as graded elements with t = X and u = Y.
struct EllipticToric {
    std::int64_t d = 1;
    std::int64_t exponent = 0;
    Axis axis = Axis::X;
    friend bool operator==(const EllipticToric&, const EllipticToric&) = default;
};

using Lnd = std::variant<Horizontal, FiberType, EllipticToric>;

std::int64_t lnd_degree(const Lnd& lnd);
std::string render(const Lnd& lnd);

/// {e >= e_min : e = e0 mod modulus}, plus e = 0 when zero_admissible.
struct DegreeSet {
    std::int64_t e0 = 0;
    std::int64_t modulus = 1;
    std::int64_t e_min = 1;
    bool empty = false;
    bool zero_admissible = false;

    bool contains(std::int64_t e) const;
    /// Least admissible degree >= 1 (nullopt when empty).
    std::optional<std::int64_t> minimal_positive() const;
    friend bool operator==(const DegreeSet&, const DegreeSet&) = default;
};

DivisorPair reverse(const DivisorPair& pair);
bool positive_lnd_exists(const DivisorPair& pair);
/// Throws FractionalPlusSpread when no positive derivation exists.
DegreeSet admissible_degrees(const DivisorPair& pair);

/// Reason e fails to be admissible (nullopt when it is admissible).
std::optional<std::string> degree_obstruction(const DivisorPair& pair, std::int64_t e);

Horizontal build_horizontal(const DivisorPair& pair, std::int64_t e);

GradedElement apply(const Lnd& lnd, const GradedElement& x);
GradedElement apply_times(const Lnd& lnd, const GradedElement& x, std::size_t times);

/// Least N <= cap with apply^N(x) = 0. Throws NotInRing or CapExceeded.
std::int64_t nilpotency_steps(const Lnd& lnd, const SurfaceSpec& spec, const GradedElement& x, std::int64_t cap);

struct StabilizationReport {
    bool verdict = false;
    std::vector<std::string> failures;
};

/// Builds the candidate of degree e on the cyclic cover s^d = t, where it is
/// simply w^e d/ds, and checks whether t and every generator of A_n with
/// |n| <= window land in A.
StabilizationReport stabilization_witness(const DivisorPair& pair, std::int64_t e, std::int64_t window = 8);

GradedElement kernel_generator(const SurfaceSpec& spec, const Lnd& lnd);

FiberType fiber_lnd(const QDivisor& d);

struct ParabolicDegrees {
    std::int64_t d = 1;
    std::int64_t e0 = 0;
    friend bool operator==(const ParabolicDegrees&, const ParabolicDegrees&) = default;
};
std::optional<ParabolicDegrees> parabolic_horizontal(const QDivisor& d);
/// Horizontal derivation of degree e >= 0 on A0[D].
Horizontal build_parabolic_horizontal(const QDivisor& d, std::int64_t e);

/// (X-axis derivation with exponent e', Y-axis derivation with exponent e).
std::pair<EllipticToric, EllipticToric> elliptic_lnd(std::int64_t d, std::int64_t e_prime);
/// X^a Y^b is Z_d-invariant iff a + e' b = 0 mod d.
bool elliptic_invariant(std::int64_t d, std::int64_t e_prime, const GradedElement& x);

/// Kernel generator of the derivation conjugated by exp(alpha * u^e d/dt)
/// on the normalization of u v = P(t).
GradedElement conjugate_kernel(const Poly& p, std::int64_t e, const Rat& alpha);

}  // namespace dpd
