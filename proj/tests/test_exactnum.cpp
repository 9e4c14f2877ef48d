#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace th;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> c(-5, 5), d(0, max_deg);
    std::vector<Rational> cs;
    int deg = d(rng);
    for (int i = 0; i <= deg; ++i) cs.push_back(ratio(c(rng), 1 + std::abs(c(rng))));
    return Poly(cs);
}

}  // namespace

TEST_CASE("poly arithmetic") {
    CHECK(T + tp(1, 2) == Poly({0, 1, 1}));
    CHECK((T * Poly(0)).is_zero());
    CHECK(tp(2, 1) * tp(3, 2) == tp(6, 3));
    CHECK(Poly({1, 0, 0}).degree() == 0);
    CHECK(Poly().degree() == -1);
    CHECK(Poly({0, 0, 3}).lowdeg() == 2);
}

TEST_CASE("ruling term") {
    Poly p({0, 0, 0, 4, -2, 1});
    auto r = ruling(p);
    REQUIRE(r);
    CHECK(r->coeff == 4);
    CHECK(r->degree == 3);
    CHECK(ruling_sign(p) == 1);
    CHECK(!ruling(Poly()));
    CHECK(ruling_sign(Poly()) == 0);
    CHECK(ruling(tp(1, 3))->degree == 3);
}

TEST_CASE("limit ratio") {
    Poly d({0, 0, 0, 4, -2, 1});
    CHECK(limit_ratio(-d, tp(2, 3)) == ExtendedRational(-2));
    CHECK(limit_ratio(tp(1, 3), tp(1, 3)) == ExtendedRational(1));
    CHECK(limit_ratio(tp(1, 2), tp(1, 3)) == ExtendedRational::pos_inf());
    CHECK(limit_ratio(tp(-1, 2), tp(1, 3)) == ExtendedRational::neg_inf());
    CHECK(limit_ratio(tp(1, 4), tp(1, 3)) == ExtendedRational(0));
    CHECK_THROWS_AS(limit_ratio(T, Poly()), DomainError);
}

TEST_CASE("series compare") {
    CHECK(series_compare(tp(2, 2), T) < 0);
    CHECK(series_compare(T + tp(1, 3), T + tp(1, 3)) == 0);
    CHECK(series_compare(T - tp(1, 2), T) < 0);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK(parse_extended("-inf") == ExtendedRational::neg_inf());
    CHECK(rationalize(0.3333333, 1000) == Rational(333, 1000));
}

TEST_CASE("extended rational order") {
    CHECK(ExtendedRational::neg_inf() < ExtendedRational(-1000));
    CHECK(ExtendedRational(5) < ExtendedRational::pos_inf());
    CHECK(!(ExtendedRational::pos_inf() < ExtendedRational::pos_inf()));
}

TEST_CASE("property: ring laws and ruling sign of products") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        Poly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        CHECK(ruling_sign(a * b) == ruling_sign(a) * ruling_sign(b));
        Rational t0(1, 7);
        CHECK((a * b).eval(t0) == a.eval(t0) * b.eval(t0));
        if (!b.is_zero() && !a.is_zero()) {
            // the limit of a/b agrees with the ruling terms
            ExtendedRational l = limit_ratio(a, b);
            if (a.lowdeg() == b.lowdeg())
                CHECK(l == ExtendedRational(Rational(a.coeff(a.lowdeg()) / b.coeff(b.lowdeg()))));
            else if (a.lowdeg() > b.lowdeg())
                CHECK(l == ExtendedRational(0));
            else
                CHECK(l.sign() == ruling_sign(a) * ruling_sign(b));
        }
        CHECK(series_compare(a, b) == -series_compare(b, a));
        CHECK((series_compare(a, b) < 0) == (ruling_sign(a - b) < 0));
    }
}
