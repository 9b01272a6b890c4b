#pragma once

// Worked surfaces with their expected invariants.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpd/classify.hpp"
#include "dpd/dpdring.hpp"

namespace dpd {

struct ExpectedFacts {
    std::optional<bool> smooth;
    std::optional<MlResult> ml;
    std::optional<std::int64_t> mm;
    std::optional<std::int64_t> minimal_degree;
    std::optional<std::int64_t> presentation_k;
    std::optional<Poly> presentation_p;
    std::optional<std::int64_t> presentation_d;
    std::optional<std::int64_t> presentation_e_prime;
    /// "none" when no model should be recognized.
    std::optional<std::string> recognition;
    std::optional<std::string> sl2;
    std::optional<std::vector<std::int64_t>> singular_orders;
};

struct CatalogEntry {
    std::string name;
    std::vector<std::int64_t> params;
    SurfaceSpec spec;
    ExpectedFacts expected;
};

const std::vector<std::string>& catalog_names();
/// Throws UnknownName or BadParams.
CatalogEntry catalog_surface(const std::string& name, const std::vector<std::int64_t>& params);
/// Mismatches between the stored facts and a report (empty when consistent).
std::vector<std::string> check_expected(const CatalogEntry& entry, const ClassificationReport& report);

}  // namespace dpd
