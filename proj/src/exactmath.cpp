#include "dpd/exactmath.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace dpd {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IrrationalLocus: return "IrrationalLocus";
        case ErrorCode::PositiveSum: return "PositiveSum";
        case ErrorCode::FractionalPlusSpread: return "FractionalPlusSpread";
        case ErrorCode::NegativeDegreeParabolic: return "NegativeDegreeParabolic";
        case ErrorCode::UnsupportedSpec: return "UnsupportedSpec";
        case ErrorCode::NonRationalRoots: return "NonRationalRoots";
        case ErrorCode::GcdViolation: return "GcdViolation";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::InadmissibleDegree: return "InadmissibleDegree";
        case ErrorCode::NotInRing: return "NotInRing";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NoPositiveLnd: return "NoPositiveLnd";
        case ErrorCode::NotSmallGroup: return "NotSmallGroup";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::BadSpecFile: return "BadSpecFile";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::OracleMismatch: return "OracleMismatch";
        case ErrorCode::GoldenMismatch: return "GoldenMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code), detail_(detail) {}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw Error(ErrorCode::Overflow, "integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

// ---------------------------------------------------------------- Rat

Rat::Rat(std::int64_t num, std::int64_t den) : Rat(Integer(num), Integer(den)) {}

Rat::Rat(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    auto bad = [&] { return Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'"); };
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view n = body.substr(0, slash);
    std::string_view m = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(n) || !digits(m)) throw bad();
    Integer num(std::string(n), 10);
    Integer den(std::string(m), 10);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rat(num, den);
}

Integer Rat::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Integer Rat::ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::int64_t Rat::to_int64() const {
    if (!is_integer()) throw Error(ErrorCode::Overflow, "value " + str() + " is not an integer");
    return dpd::to_int64(q_.get_num());
}

std::string Rat::str() const { return q_.get_str(); }

Rat& Rat::operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
}
Rat& Rat::operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
}
Rat& Rat::operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
}
Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rat pow(const Rat& base, std::int64_t exponent) {
    if (exponent < 0) return pow(Rat(1) / base, -exponent);
    Rat result(1);
    Rat b = base;
    for (auto e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rat> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly::Poly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly Poly::t() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, std::size_t exponent) {
    if (c.is_zero()) return {};
    std::vector<Rat> v(exponent + 1);
    v[exponent] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_power(const Rat& a, std::size_t m) {
    if (a.is_zero()) return monomial(Rat(1), m);
    return pow(Poly(std::vector<Rat>{-a, Rat(1)}), m);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

Rat Poly::coeff(std::size_t exponent) const { return exponent < c_.size() ? c_[exponent] : Rat(0); }

Rat Poly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (c_.empty()) return {};
    Poly r = *this;
    r *= Rat(1) / leading();
    return r;
}

Poly Poly::inflate(std::size_t k) const {
    if (c_.empty() || k == 1) return *this;
    std::vector<Rat> v((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::translate(const Rat& shift) const {
    const Poly lin(std::vector<Rat>{shift, Rat(1)});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

std::size_t Poly::root_multiplicity(const Rat& a) const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "root multiplicity in zero polynomial");
    std::size_t m = 0;
    std::vector<Rat> cur = c_;
    while (cur.size() > 1) {
        // synthetic division by (t - a)
        std::vector<Rat> q(cur.size() - 1);
        Rat carry(0);
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = carry * a + cur[i];
            q[i - 1] = carry;
        }
        Rat rem = carry * a + cur[0];
        if (!rem.is_zero()) break;
        cur = std::move(q);
        ++m;
    }
    return m;
}

std::size_t Poly::t_adic_order() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "t-adic order of zero polynomial");
    std::size_t i = 0;
    while (c_[i].is_zero()) ++i;
    return i;
}

std::string Poly::str(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        Rat mag = abs(c);
        if (c.sign() < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (i == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rat(1)) out += mag.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    mpq_class prod;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            mpq_mul(prod.get_mpq_t(), a.c_[i].raw().get_mpq_t(), b.c_[j].raw().get_mpq_t());
            mpq_add(acc[i + j].get_mpq_t(), acc[i + j].get_mpq_t(), prod.get_mpq_t());
        }
    }
    std::vector<Rat> v;
    v.reserve(acc.size());
    for (auto& q : acc) v.emplace_back(std::move(q));
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly pow(const Poly& base, std::size_t exponent) {
    Poly result(Rat(1));
    Poly b = base;
    for (auto e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Rat> rem = a.coefficients();
    const auto& bc = b.coefficients();
    if (rem.size() < bc.size()) return {Poly(), a};
    std::vector<Rat> quo(rem.size() - bc.size() + 1);
    const Rat inv_lead = Rat(1) / bc.back();
    for (std::size_t i = quo.size(); i-- > 0;) {
        Rat f = rem[i + bc.size() - 1] * inv_lead;
        quo[i] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] -= f * bc[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rat(1));
        return;
    }
    const auto& dc = den.coefficients();
    if (std::all_of(dc.begin(), dc.end() - 1, [](const Rat& c) { return c.is_zero(); })) {
        // den = c t^j: cancel the common power of t directly
        const auto& nc = num.coefficients();
        std::size_t z = 0;
        while (nc[z].is_zero()) ++z;
        const std::size_t j = dc.size() - 1;
        const std::size_t cut = std::min(z, j);
        const Rat inv = Rat(1) / dc.back();
        std::vector<Rat> n(nc.begin() + static_cast<std::ptrdiff_t>(cut), nc.end());
        for (auto& c : n) c *= inv;
        num_ = Poly(std::move(n));
        den_ = Poly::monomial(Rat(1), j - cut);
        return;
    }
    Poly g = gcd(num, den);
    Poly n = divmod(num, g).first;
    Poly d = divmod(den, g).first;
    Rat lc = d.leading();
    Rat inv = Rat(1) / lc;
    n *= inv;
    d *= inv;
    num_ = std::move(n);
    den_ = std::move(d);
}

RatFunc RatFunc::linear_power(const Rat& a, std::int64_t m) {
    if (m >= 0) return RatFunc(Poly::linear_power(a, static_cast<std::size_t>(m)));
    return RatFunc(Poly(Rat(1)), Poly::linear_power(a, static_cast<std::size_t>(-m)));
}

std::int64_t RatFunc::order_at(const Rat& a) const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "order of the zero function");
    return static_cast<std::int64_t>(num_.root_multiplicity(a)) -
           static_cast<std::int64_t>(den_.root_multiplicity(a));
}

RatFunc RatFunc::derivative() const {
    if (is_polynomial()) return RatFunc(num_.derivative());
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::inflate(std::size_t k) const { return RatFunc(num_.inflate(k), den_.inflate(k)); }

RatFunc RatFunc::translate(const Rat& shift) const {
    return RatFunc(num_.translate(shift), den_.translate(shift));
}

std::string RatFunc::str(std::string_view var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc pow(const RatFunc& base, std::int64_t exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    return RatFunc(pow(base.num(), static_cast<std::size_t>(exponent)),
                   pow(base.den(), static_cast<std::size_t>(exponent)));
}

// ---------------------------------------------------------------- number theory

std::int64_t mod_inverse(std::int64_t e, std::int64_t d) {
    if (d <= 0) throw Error(ErrorCode::BadParams, "modulus must be positive");
    if (e < 0) throw Error(ErrorCode::BadParams, "residue must be nonnegative");
    if (d == 1) return 0;
    Integer inv;
    Integer ez(e % d);
    Integer dz(d);
    if (mpz_invert(inv.get_mpz_t(), ez.get_mpz_t(), dz.get_mpz_t()) == 0) {
        throw Error(ErrorCode::NotCoprime,
                    "gcd(" + std::to_string(e) + ", " + std::to_string(d) + ") > 1");
    }
    return to_int64(inv);
}

namespace {

// Positive divisors of |n| (n != 0), by trial division.
std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::map<Integer, int> factors;
    Integer p = 2;
    while (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            ++factors[n];
            break;
        }
        if (p * p > n) {
            ++factors[n];
            break;
        }
        while (n % p == 0) {
            ++factors[p];
            n /= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    std::vector<Integer> divs{1};
    for (const auto& [prime, mult] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= mult; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Primitive integer polynomial proportional to p.
std::vector<Integer> primitive_integer_form(const Poly& p) {
    Integer l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p.coefficients()) {
        Integer v = c.num() * (l / c.den());
        out.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 0)
        for (auto& v : out) v /= g;
    return out;
}

}  // namespace

Poly LinearFactorization::expand() const {
    Poly acc(leading);
    for (const auto& r : roots) acc *= Poly::linear_power(r.root, static_cast<std::size_t>(r.multiplicity));
    return acc * remainder;
}

LinearFactorization rational_linear_factorization(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    LinearFactorization out{p.leading(), {}, Poly(Rat(1))};
    Poly rest = p.monic();

    if (rest.degree() > 0) {
        const std::size_t z = rest.t_adic_order();
        if (z > 0) {
            out.roots.push_back({Rat(0), static_cast<std::int64_t>(z)});
            rest = divmod(rest, Poly::monomial(Rat(1), z)).first;
        }
    }
    if (rest.degree() > 0) {
        // Candidates come from the squarefree part to keep the integers small.
        Poly sqfree = divmod(rest, gcd(rest, rest.derivative())).first.monic();
        std::vector<Integer> ints = primitive_integer_form(sqfree);
        const auto numerators = positive_divisors(ints.front());
        const auto denominators = positive_divisors(ints.back());
        std::vector<Rat> found;
        for (const auto& q : denominators) {
            for (const auto& a : numerators) {
                for (int s : {1, -1}) {
                    Rat cand(Integer(a * s), q);
                    if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
                    if (!sqfree(cand).is_zero()) continue;
                    found.push_back(cand);
                }
            }
        }
        for (const auto& r : found) {
            const std::size_t m = rest.root_multiplicity(r);
            rest = divmod(rest, Poly::linear_power(r, m)).first;
            out.roots.push_back({r, static_cast<std::int64_t>(m)});
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
    out.remainder = rest.monic();
    return out;
}

}  // namespace dpd
