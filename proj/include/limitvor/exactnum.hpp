#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace limitvor {

using Rational = mpq_class;
using Integer = mpz_class;

int sign(const Rational& r);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
double to_double(const Rational& r);
// Nearest rational with the given denominator (round half away from zero).
Rational rationalize(double v, long denominator);

// Univariate polynomial in t, ascending coefficients, trailing zeros stripped.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational& c, std::size_t degree);
    static Poly t() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    // Lowest degree with a nonzero coefficient; -1 for zero.
    long lowdeg() const;

    Rational eval(const Rational& t) const;
    double eval(double t) const;
    Rational constant() const { return coeff(0); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str() const;

private:
    void strip();
    std::vector<Rational> c_;
};

Poly scale(const Poly& p, const Rational& r);

struct Term {
    Rational coeff;
    std::size_t degree;
};

std::optional<Term> ruling(const Poly& p);
int ruling_sign(const Poly& p);

class ExtendedRational {
public:
    enum class Kind { Finite, PosInf, NegInf };

    ExtendedRational() : kind_(Kind::Finite), value_(0) {}
    ExtendedRational(const Rational& v) : kind_(Kind::Finite), value_(v) {}
    ExtendedRational(long v) : kind_(Kind::Finite), value_(v) {}
    static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }
    static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
    static ExtendedRational infinity(int sgn) { return sgn > 0 ? pos_inf() : neg_inf(); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ != Kind::Finite; }
    // Only meaningful when finite.
    const Rational& value() const { return value_; }
    int sign() const;
    double to_double() const;
    std::string str() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);

private:
    explicit ExtendedRational(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    Rational value_;
};

ExtendedRational parse_extended(const std::string& s);

// lim_{t->0+} num(t)/den(t).
ExtendedRational limit_ratio(const Poly& num, const Poly& den);

// Lexicographic comparison of coefficients in ascending degree: -1, 0, +1.
int series_compare(const Poly& p, const Poly& q);

}  // namespace limitvor
