#pragma once

// Fibers, singularities, Makar-Limanov and Miyanishi-Masuda invariants,
// model recognition, and the aggregate classification report.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpd/divisor.hpp"
#include "dpd/dpdring.hpp"
#include "dpd/lnd.hpp"

namespace dpd {

struct FiberData {
    Rat point;
    std::int64_t m_plus = 1;
    std::int64_t e_plus = 0;
    std::int64_t m_minus = -1;
    std::int64_t e_minus = 0;
    bool degenerate = false;
    /// Zero for non-degenerate points.
    std::int64_t delta = 0;
    std::pair<std::int64_t, std::int64_t> pi_star{0, 0};
    std::pair<std::int64_t, std::int64_t> div_u{0, 0};
    friend bool operator==(const FiberData&, const FiberData&) = default;
};

/// Normalizes internally; the point keeps its coordinate.
FiberData fiber_structure(const DivisorPair& pair, const Rat& a);

struct RulingComponent {
    Rat point;
    std::int64_t multiplicity = 1;
    friend bool operator==(const RulingComponent&, const RulingComponent&) = default;
};
/// Throws NoPositiveLnd.
std::vector<RulingComponent> ruling_divisor(const DivisorPair& pair);

struct QuotientType {
    std::int64_t d = 1;
    std::int64_t e = 0;
    friend bool operator==(const QuotientType&, const QuotientType&) = default;
};

struct SingularityRecord {
    Rat point;
    std::int64_t order = 1;
    bool smooth = true;
    std::optional<QuotientType> chart_type;
    bool chart_valid = false;
    friend bool operator==(const SingularityRecord&, const SingularityRecord&) = default;
};

std::vector<SingularityRecord> singular_points(const DivisorPair& pair);

enum class MlKind { Trivial, PolynomialRing, LaurentRing, WholeRing };
std::string ml_name(MlKind kind);

struct MlResult {
    MlKind kind = MlKind::Trivial;
    /// Degree of the kernel generator for PolynomialRing (0 means t).
    std::int64_t generator_degree = 0;
    friend bool operator==(const MlResult&, const MlResult&) = default;
};

MlResult ml_invariant(const SurfaceSpec& spec);

struct MmCheck {
    std::int64_t divisor_formula = 0;
    /// deg P of the cyclic-cover presentation, when one exists.
    std::optional<std::int64_t> presentation_degree;
    /// gcd(d+, d-) * deg P for div P = -gcd * d+' * d-' * (D+ + D-).
    std::optional<std::int64_t> gcd_times_degree;
    bool consistent = true;
};

/// Homogeneous Miyanishi-Masuda invariant; nullopt unless ML is trivial.
std::optional<std::int64_t> mm_invariant(const SurfaceSpec& spec);
/// Both sides of the cross-check for a hyperbolic pair with trivial ML.
MmCheck mm_cross_check(const DivisorPair& pair);

enum class ModelKind { A2, LineCrossTorus, Quadric, ConicComplement, VeroneseEven, VeroneseOdd, VeroneseCone };

struct Model {
    ModelKind kind = ModelKind::A2;
    /// Cone degree for the Veronese variants; 0 otherwise.
    std::int64_t parameter = 0;
    std::string name() const;
    friend bool operator==(const Model&, const Model&) = default;
};

std::optional<Model> recognize_sl2(const DivisorPair& pair);
std::optional<Model> recognize_homogeneous(const SurfaceSpec& spec);

/// Torus-invariant (d, e') for toric specs.
std::optional<QuotientType> toric_type(const SurfaceSpec& spec);

/// Normal form fixed up to translation: the fractional point of D+ (or else
/// the largest support point) goes to 0.
struct CanonicalFrame {
    SurfaceSpec spec;
    /// The translation a -> a + offset that was applied.
    Rat offset;
};
CanonicalFrame canonical_frame(const SurfaceSpec& spec);

struct LndSummary {
    bool exists = false;
    std::optional<DegreeSet> degrees;
    std::optional<std::int64_t> minimal_degree;
};

struct ClassificationReport {
    SurfaceSpec input;
    Rat translation;
    SurfaceSpec normalized;
    std::string grading;
    std::int64_t d_plus = 1;
    std::int64_t d_minus = 1;
    LndSummary positive;
    LndSummary negative;
    bool fiber_lnd = false;
    MlResult ml;
    std::optional<std::int64_t> mm;
    bool mm_is_a2 = false;
    std::optional<MmCheck> mm_check;
    std::optional<Presentation> presentation;
    std::vector<FiberData> fibers;
    std::vector<RulingComponent> ruling;
    std::vector<SingularityRecord> singularities;
    bool smooth = true;
    std::optional<Model> sl2;
    std::optional<Model> recognition;
    std::optional<QuotientType> toric;
};

ClassificationReport classify(const SurfaceSpec& spec);

}  // namespace dpd
