#pragma once

// JSON and text forms of divisors, specs and reports.

#include <string>

#include <json.hpp>

#include "dpd/classify.hpp"
#include "dpd/dpdring.hpp"
#include "dpd/lnd.hpp"

namespace dpd {

using Json = nlohmann::ordered_json;

Json to_json(const QDivisor& d);
Json to_json(const DivisorPair& p);
Json to_json(const SurfaceSpec& spec);
Json to_json(const DegreeSet& s);
Json to_json(const Presentation& p);
Json to_json(const FiberData& f);
Json to_json(const SingularityRecord& s);
Json to_json(const MmCheck& c);
Json to_json(const ClassificationReport& r);

/// Throws BadSpecFile on malformed input and PositiveSum on invalid pairs.
QDivisor divisor_from_json(const Json& j);
SurfaceSpec spec_from_json(const Json& j);
SurfaceSpec spec_from_text(const std::string& text);

std::string to_text(const SurfaceSpec& spec);
std::string to_text(const ClassificationReport& r);

}  // namespace dpd
