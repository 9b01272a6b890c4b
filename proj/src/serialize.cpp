#include "dpd/serialize.hpp"

#include <sstream>

namespace dpd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadSpecFile, what); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const Error& e) {
            bad("bad rational literal: " + e.detail());
        }
    }
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>(), 1);
    bad("rational literal must be a string \"n\" or \"n/m\"");
}

std::int64_t int_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field '") + key + "'");
    return j[key].get<std::int64_t>();
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string divisor_text(const QDivisor& d) {
    if (d.is_zero()) return "0";
    std::string out;
    for (const auto& [a, c] : d.terms()) {
        const Rat m = abs(c);
        const std::string body = (m == Rat(1) ? std::string() : m.str() + "·") + "[" + a.str() + "]";
        if (out.empty()) {
            out = (c.sign() < 0 ? "-" : "") + body;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

Json summary_json(const LndSummary& s) {
    Json j;
    j["exists"] = s.exists;
    j["degrees"] = s.degrees ? to_json(*s.degrees) : Json(nullptr);
    j["minimal_degree"] = optional_json(s.minimal_degree);
    return j;
}

std::string degrees_text(const LndSummary& s) {
    if (!s.exists) return "none";
    if (!s.degrees) return "yes";
    const DegreeSet& d = *s.degrees;
    std::string out = "e >= " + std::to_string(d.e_min) + ", e = " + std::to_string(d.e0) + " mod " +
                      std::to_string(d.modulus);
    if (d.zero_admissible) out += ", and e = 0";
    if (s.minimal_degree) out += " (minimal " + std::to_string(*s.minimal_degree) + ")";
    return out;
}

}  // namespace

Json to_json(const QDivisor& d) {
    Json arr = Json::array();
    for (const auto& [a, c] : d.terms()) arr.push_back(Json::array({a.str(), c.str()}));
    return arr;
}

Json to_json(const DivisorPair& p) {
    Json j;
    j["d_plus"] = to_json(p.plus());
    j["d_minus"] = to_json(p.minus());
    return j;
}

Json to_json(const SurfaceSpec& spec) {
    Json j;
    if (const auto* e = std::get_if<Elliptic>(&spec)) {
        j["elliptic"] = {{"d", e->d}, {"e_prime", e->e_prime}};
    } else if (const auto* p = std::get_if<Parabolic>(&spec)) {
        j["parabolic"] = {{"divisor", to_json(p->divisor)}};
    } else {
        j["hyperbolic"] = to_json(std::get<Hyperbolic>(spec).pair);
    }
    return j;
}

Json to_json(const DegreeSet& s) {
    return {{"residue", s.e0}, {"modulus", s.modulus}, {"e_min", s.e_min}, {"zero_admissible", s.zero_admissible}};
}

Json to_json(const Presentation& p) {
    return {{"k", p.k},
            {"P", p.p.str("s")},
            {"d", p.d},
            {"e_prime", p.e_prime},
            {"l", p.l},
            {"Q", p.q.str("t")},
            {"zd_weights", {p.zd_weights.s, p.zd_weights.u, p.zd_weights.v}},
            {"center", p.center.str()}};
}

Json to_json(const FiberData& f) {
    Json j;
    j["point"] = f.point.str();
    j["degenerate"] = f.degenerate;
    j["m_plus"] = f.m_plus;
    j["m_minus"] = f.m_minus;
    if (f.degenerate) {
        j["e_plus"] = f.e_plus;
        j["e_minus"] = f.e_minus;
        j["delta"] = f.delta;
        j["pi_star"] = {f.pi_star.first, f.pi_star.second};
        j["div_u"] = {f.div_u.first, f.div_u.second};
    } else {
        j["fiber"] = "single closed orbit";
    }
    return j;
}

Json to_json(const SingularityRecord& s) {
    Json j;
    j["point"] = s.point.str();
    j["order"] = s.order;
    j["smooth"] = s.smooth;
    j["chart_valid"] = s.chart_valid;
    j["chart_type"] = s.chart_type ? Json::array({s.chart_type->d, s.chart_type->e}) : Json(nullptr);
    return j;
}

Json to_json(const MmCheck& c) {
    return {{"divisor_formula", c.divisor_formula},
            {"presentation_degree", optional_json(c.presentation_degree)},
            {"gcd_times_degree", optional_json(c.gcd_times_degree)},
            {"consistent", c.consistent}};
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["input"] = {{"spec", to_json(r.input)}, {"translation", r.translation.str()}};
    j["normalized"] = to_json(r.normalized);
    j["grading"] = r.grading;
    j["d_plus"] = r.d_plus;
    j["d_minus"] = r.d_minus;
    j["lnd"] = {{"positive", summary_json(r.positive)},
                {"negative", summary_json(r.negative)},
                {"fiber_type", r.fiber_lnd}};
    j["ml"] = ml_name(r.ml.kind);
    j["ml_generator_degree"] = r.ml.kind == MlKind::PolynomialRing ? Json(r.ml.generator_degree) : Json(nullptr);
    j["mm_h"] = optional_json(r.mm);
    j["mm_is_a2"] = r.mm_is_a2;
    j["mm_check"] = r.mm_check ? to_json(*r.mm_check) : Json(nullptr);
    j["presentation"] = r.presentation ? to_json(*r.presentation) : Json(nullptr);
    Json fibers = Json::array();
    for (const auto& f : r.fibers) fibers.push_back(to_json(f));
    j["fibers"] = fibers;
    Json ruling = Json::array();
    for (const auto& c : r.ruling) ruling.push_back(Json::array({c.point.str(), c.multiplicity}));
    j["ruling"] = ruling;
    Json sing = Json::array();
    for (const auto& s : r.singularities) sing.push_back(to_json(s));
    j["singularities"] = sing;
    j["smooth"] = r.smooth;
    j["sl2"] = r.sl2 ? Json(r.sl2->name()) : Json(nullptr);
    j["recognition"] = r.recognition ? Json(r.recognition->name()) : Json(nullptr);
    j["toric"] = r.toric ? Json::array({r.toric->d, r.toric->e}) : Json(nullptr);
    return j;
}

QDivisor divisor_from_json(const Json& j) {
    if (!j.is_array()) bad("divisor must be an array of [point, coefficient] pairs");
    std::vector<std::pair<Rat, Rat>> terms;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2) bad("divisor entries must be [point, coefficient]");
        terms.emplace_back(rat_from_json(item[0]), rat_from_json(item[1]));
    }
    return QDivisor(terms);
}

SurfaceSpec spec_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 1) bad("spec must be an object with exactly one grading key");
    if (j.contains("elliptic")) {
        const Json& e = j["elliptic"];
        try {
            return Elliptic(int_from_json(e, "d"), int_from_json(e, "e_prime"));
        } catch (const Error& err) {
            if (err.code() == ErrorCode::BadParams) bad(err.detail());
            throw;
        }
    }
    if (j.contains("parabolic")) {
        const Json& p = j["parabolic"];
        if (!p.is_object() || !p.contains("divisor")) bad("parabolic spec needs 'divisor'");
        return Parabolic{divisor_from_json(p["divisor"])};
    }
    if (j.contains("hyperbolic")) {
        const Json& h = j["hyperbolic"];
        if (!h.is_object() || !h.contains("d_plus") || !h.contains("d_minus"))
            bad("hyperbolic spec needs 'd_plus' and 'd_minus'");
        return Hyperbolic{{divisor_from_json(h["d_plus"]), divisor_from_json(h["d_minus"])}};
    }
    bad("unknown grading key (expected elliptic, parabolic or hyperbolic)");
}

SurfaceSpec spec_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

std::string to_text(const SurfaceSpec& spec) {
    if (const auto* e = std::get_if<Elliptic>(&spec))
        return "elliptic V(" + std::to_string(e->d) + ", " + std::to_string(e->e_prime) + ")";
    if (const auto* p = std::get_if<Parabolic>(&spec)) return "parabolic D = " + divisor_text(p->divisor);
    const DivisorPair& pair = std::get<Hyperbolic>(spec).pair;
    return "hyperbolic D+ = " + divisor_text(pair.plus()) + ", D- = " + divisor_text(pair.minus());
}

std::string to_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "input:          " << to_text(r.input) << "\n";
    os << "translation:    a -> a " << (r.translation.sign() < 0 ? "- " : "+ ") << abs(r.translation).str() << "\n";
    os << "normal form:    " << to_text(r.normalized) << "\n";
    os << "grading:        " << r.grading << "\n";
    os << "d+ / d-:        " << r.d_plus << " / " << r.d_minus << "\n";
    os << "LND degree > 0: " << degrees_text(r.positive) << "\n";
    os << "LND degree < 0: " << degrees_text(r.negative) << "\n";
    if (r.fiber_lnd) os << "fiber LND:      degree -1\n";
    os << "ML:             " << ml_name(r.ml.kind);
    if (r.ml.kind == MlKind::PolynomialRing) os << " (generator degree " << r.ml.generator_degree << ")";
    os << "\n";
    os << "MM_h:           " << (r.mm ? std::to_string(*r.mm) : "undefined") << (r.mm_is_a2 ? " (A2)" : "") << "\n";
    if (r.mm_check) {
        os << "MM_h check:     deg P = "
           << (r.mm_check->presentation_degree ? std::to_string(*r.mm_check->presentation_degree) : "n/a")
           << ", gcd(d+,d-) deg P' = "
           << (r.mm_check->gcd_times_degree ? std::to_string(*r.mm_check->gcd_times_degree) : "n/a")
           << (r.mm_check->consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
    }
    if (r.presentation) {
        const Presentation& p = *r.presentation;
        os << "presentation:   u^" << p.k << " v = " << p.p.str("s") << "   (d = " << p.d << ", e' = " << p.e_prime
           << ", l = " << p.l << ", Q = " << p.q.str("t") << ", weights (1, " << p.e_prime << ", 0))\n";
    }
    for (const auto& f : r.fibers) {
        os << "fiber at " << f.point.str() << ":    ";
        if (f.degenerate) {
            os << "two orbit closures, pi* = (" << f.pi_star.first << ", " << f.pi_star.second << "), div u = ("
               << f.div_u.first << ", " << f.div_u.second << "), delta = " << f.delta << "\n";
        } else {
            os << "single closed orbit\n";
        }
    }
    for (const auto& c : r.ruling) os << "ruling comp:    [" << c.point.str() << "] x " << c.multiplicity << "\n";
    for (const auto& s : r.singularities) {
        os << "point over " << s.point.str() << ":  order " << s.order << (s.smooth ? " smooth" : " singular");
        if (s.chart_type) os << ", type (" << s.chart_type->d << ", " << s.chart_type->e << ")";
        os << "\n";
    }
    os << "smooth:         " << (r.smooth ? "yes" : "no") << "\n";
    os << "SL2 template:   " << (r.sl2 ? r.sl2->name() : "none") << "\n";
    os << "model:          " << (r.recognition ? r.recognition->name() : "none") << "\n";
    os << "toric:          "
       << (r.toric ? "(" + std::to_string(r.toric->d) + ", " + std::to_string(r.toric->e) + ")" : std::string("no"))
       << "\n";
    return os.str();
}

}  // namespace dpd
