#include "limitvor/exactnum.hpp"

#include "limitvor/errors.hpp"

#include <cmath>
#include <sstream>

namespace limitvor {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::CoincidentSites: return "CoincidentSites";
    case ErrorKind::CollinearTriple: return "CollinearTriple";
    case ErrorKind::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorKind::NotZeroCluster: return "NotZeroCluster";
    case ErrorKind::EmptySkeleton: return "EmptySkeleton";
    case ErrorKind::PointOutsideUnitDisk: return "PointOutsideUnitDisk";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::InfiniteSlopeOnChart: return "InfiniteSlopeOnChart";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::CoincidentWithHinge: return "CoincidentWithHinge";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::NotAccepted: return "NotAccepted";
    case ErrorKind::TooManyZeroRatios: return "TooManyZeroRatios";
    case ErrorKind::ReadOffUndefined: return "ReadOffUndefined";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

int sign(const Rational& r) { return sgn(r); }

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ') t += ch;
    if (t.empty()) throw ParseError("empty rational");
    auto check = [&](const std::string& part) {
        std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) throw ParseError("bad rational '" + s + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw ParseError("bad rational '" + s + "'");
    };
    auto slash = t.find('/');
    if (slash == std::string::npos) {
        // decimal literals like "0.25" are accepted exactly
        auto dot = t.find('.');
        if (dot != std::string::npos) {
            std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
            bool neg = !ip.empty() && ip[0] == '-';
            if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
            if (ip.empty()) ip = "0";
            check(ip);
            if (!fp.empty()) check(fp);
            Integer num(ip + fp, 10);
            Integer den = 1;
            for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
            Rational r(num, den);
            r.canonicalize();
            return neg ? Rational(-r) : r;
        }
        check(t);
        std::string u = t[0] == '+' ? t.substr(1) : t;
        return Rational(Integer(u, 10));
    }
    std::string a = t.substr(0, slash), b = t.substr(slash + 1);
    check(a);
    check(b);
    if (a[0] == '+') a = a.substr(1);
    if (b[0] == '+') b = b.substr(1);
    Integer den(b, 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(Integer(a, 10), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

Rational rationalize(double v, long denominator) {
    double scaled = std::round(v * static_cast<double>(denominator));
    Rational r{Integer(scaled), Integer(denominator)};
    r.canonicalize();
    return r;
}

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::strip() {
    for (auto& x : c_) x.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

long Poly::lowdeg() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return -1;
}

Rational Poly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double Poly::eval(double t) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    strip();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    strip();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    strip();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            a = abs(a);
        } else if (a < 0 && i > 0) {
            os << "-";
            a = abs(a);
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str();
        os << "t";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Poly scale(const Poly& p, const Rational& r) { return p * Poly(r); }

std::optional<Term> ruling(const Poly& p) {
    long d = p.lowdeg();
    if (d < 0) return std::nullopt;
    return Term{p.coeff(static_cast<std::size_t>(d)), static_cast<std::size_t>(d)};
}

int ruling_sign(const Poly& p) {
    auto r = ruling(p);
    return r ? sgn(r->coeff) : 0;
}

int ExtendedRational::sign() const {
    switch (kind_) {
    case Kind::PosInf: return 1;
    case Kind::NegInf: return -1;
    default: return sgn(value_);
    }
}

double ExtendedRational::to_double() const {
    switch (kind_) {
    case Kind::PosInf: return HUGE_VAL;
    case Kind::NegInf: return -HUGE_VAL;
    default: return value_.get_d();
    }
}

std::string ExtendedRational::str() const {
    switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    default: return value_.get_str();
    }
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    using K = ExtendedRational::Kind;
    if (a.kind_ == K::NegInf) return b.kind_ != K::NegInf;
    if (a.kind_ == K::PosInf) return false;
    if (b.kind_ == K::PosInf) return true;
    if (b.kind_ == K::NegInf) return false;
    return a.value_ < b.value_;
}

ExtendedRational parse_extended(const std::string& s) {
    if (s == "inf" || s == "+inf") return ExtendedRational::pos_inf();
    if (s == "-inf") return ExtendedRational::neg_inf();
    return ExtendedRational(parse_rational(s));
}

ExtendedRational limit_ratio(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DomainError(ErrorKind::ZeroDenominator, "limit_ratio with zero denominator");
    if (num.is_zero()) return ExtendedRational(0);
    long a = num.lowdeg(), b = den.lowdeg();
    if (a > b) return ExtendedRational(0);
    if (a == b) {
        Rational r = num.coeff(a) / den.coeff(b);
        return ExtendedRational(r);
    }
    return ExtendedRational::infinity(ruling_sign(num) * ruling_sign(den));
}

int series_compare(const Poly& p, const Poly& q) {
    std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(p.coeff(i), q.coeff(i));
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

}  // namespace limitvor
