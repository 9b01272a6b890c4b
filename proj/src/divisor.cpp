#include "dpd/divisor.hpp"

#include <algorithm>

namespace dpd {

AffineMap::AffineMap(Rat scale, Rat offset) : scale_(std::move(scale)), offset_(std::move(offset)) {
    if (scale_.is_zero()) throw Error(ErrorCode::BadParams, "affine map with zero scale");
}

AffineMap AffineMap::inverse() const {
    Rat inv = Rat(1) / scale_;
    return {inv, -offset_ * inv};
}

// ---------------------------------------------------------------- QDivisor

QDivisor::QDivisor(const std::vector<std::pair<Rat, Rat>>& terms) {
    for (const auto& [a, c] : terms) set(a, (*this)(a) + c);
}

QDivisor QDivisor::point(const Rat& a, const Rat& coefficient) {
    QDivisor d;
    d.set(a, coefficient);
    return d;
}

void QDivisor::set(const Rat& a, const Rat& c) {
    if (c.is_zero()) {
        terms_.erase(a);
    } else {
        terms_[a] = c;
    }
}

Rat QDivisor::operator()(const Rat& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Rat> QDivisor::support() const {
    std::vector<Rat> out;
    out.reserve(terms_.size());
    for (const auto& kv : terms_) out.push_back(kv.first);
    return out;
}

Rat QDivisor::degree() const {
    Rat s(0);
    for (const auto& kv : terms_) s += kv.second;
    return s;
}

bool QDivisor::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_integer(); });
}

QDivisor QDivisor::transport(const AffineMap& g) const {
    QDivisor out;
    for (const auto& [a, c] : terms_) out.set(g(a), c);
    return out;
}

QDivisor QDivisor::operator-() const {
    QDivisor out;
    for (const auto& [a, c] : terms_) out.terms_[a] = -c;
    return out;
}

QDivisor& QDivisor::operator+=(const QDivisor& o) {
    for (const auto& [a, c] : o.terms_) set(a, (*this)(a) + c);
    return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& o) {
    for (const auto& [a, c] : o.terms_) set(a, (*this)(a) - c);
    return *this;
}

QDivisor operator*(const Rat& c, const QDivisor& d) {
    QDivisor out;
    if (c.is_zero()) return out;
    for (const auto& [a, v] : d.terms_) out.terms_[a] = c * v;
    return out;
}

std::int64_t denom_index(const QDivisor& d) {
    Integer l = 1;
    for (const auto& kv : d.terms()) {
        Integer den = kv.second.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    return to_int64(l);
}

FloorFrac floor_frac(const QDivisor& d) {
    std::vector<std::pair<Rat, Rat>> fl;
    std::vector<std::pair<Rat, Rat>> fr;
    for (const auto& [a, c] : d.terms()) {
        Rat f(c.floor());
        fl.emplace_back(a, f);
        fr.emplace_back(a, c - f);
    }
    return {QDivisor(fl), QDivisor(fr)};
}

QDivisor ceil(const QDivisor& d) {
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& [a, c] : d.terms()) out.emplace_back(a, Rat(c.ceil()));
    return QDivisor(out);
}

// ---------------------------------------------------------------- DivisorPair

DivisorPair::DivisorPair(QDivisor plus, QDivisor minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
    const QDivisor s = sum();
    for (const auto& [a, c] : s.terms()) {
        if (c.sign() > 0)
            throw Error(ErrorCode::PositiveSum,
                        "D+ + D- has coefficient " + c.str() + " > 0 at point " + a.str());
    }
}

std::vector<Rat> DivisorPair::support() const {
    std::vector<Rat> out = plus_.support();
    for (const auto& a : minus_.support()) out.push_back(a);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DivisorPair DivisorPair::transport(const AffineMap& g) const {
    return {plus_.transport(g), minus_.transport(g)};
}

DivisorPair DivisorPair::shift(const QDivisor& s) const {
    if (!s.is_integral()) throw Error(ErrorCode::BadParams, "shift by a non-integral divisor");
    return {plus_ + s, minus_ - s};
}

DivisorPair normalize_pair(const DivisorPair& p) { return p.shift(-ceil(p.plus())); }

bool shift_equivalent(const DivisorPair& p1, const DivisorPair& p2) {
    return normalize_pair(p1) == normalize_pair(p2);
}

std::optional<AffineMap> affine_equivalent(const DivisorPair& p1, const DivisorPair& p2) {
    const DivisorPair n1 = normalize_pair(p1);
    const DivisorPair n2 = normalize_pair(p2);
    const auto s1 = n1.support();
    const auto s2 = n2.support();
    if (s1.size() != s2.size()) return std::nullopt;
    if (n1.sum().degree() != n2.sum().degree()) return std::nullopt;

    auto label = [](const DivisorPair& p, const Rat& a) { return std::make_pair(p.plus()(a), p.minus()(a)); };
    auto works = [&](const AffineMap& g) { return n1.transport(g) == n2; };

    if (s1.empty()) return AffineMap{};
    if (s1.size() == 1) {
        AffineMap g = AffineMap::translation(s2[0] - s1[0]);
        return works(g) ? std::optional<AffineMap>(g) : std::nullopt;
    }
    const Rat& a1 = s1[0];
    const Rat& a2 = s1[1];
    const auto l1 = label(n1, a1);
    const auto l2 = label(n1, a2);
    for (const auto& b1 : s2) {
        if (label(n2, b1) != l1) continue;
        for (const auto& b2 : s2) {
            if (b2 == b1 || label(n2, b2) != l2) continue;
            Rat scale = (b2 - b1) / (a2 - a1);
            AffineMap g(scale, b1 - scale * a1);
            if (works(g)) return g;
        }
    }
    return std::nullopt;
}

}  // namespace dpd
