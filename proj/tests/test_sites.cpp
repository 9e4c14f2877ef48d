#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace th;

TEST_CASE("direction of polynomial sites") {
    CHECK(direction(site(1, T, T), site(2, -T, tp(1, 2))) == DirectionVector{-2, -1});
    CHECK(direction(site(1, 0, 0), site(2, T, 0)) == DirectionVector{1, 0});
    SiteSet s = load_sites("ex20.json");
    CHECK(direction(s.by_label(3), s.by_label(11)) == DirectionVector{-2, -3});
    CHECK(DirectionVector::primitive(q("4/3"), q("-2")) == DirectionVector{2, -3});
}

TEST_CASE("orientation") {
    PolySite u = site(1, 0, -T), v = site(2, -T, 0);
    CHECK(orientation(u, v, site(3, T, tp(-2, 1))) == Orientation::Collinear);
    PolySite w = site(3, T - tp(1, 2), tp(-2, 1));
    CHECK(orientation(u, v, w) == Orientation::Left);
    CHECK(orientation(v, u, w) == Orientation::Right);
}

TEST_CASE("circle centers") {
    PolySite u = site(1, 0, -T), v = site(2, -T, 0), w = site(3, T - tp(1, 2), tp(-2, 1));
    CircleCenter c = circle_center(u, v, w);
    CHECK(c.center == ExtendedPoint{ExtendedRational(-2), ExtendedRational(-2)});
    CHECK(!c.clockwise);
    CHECK(positive_radius(u, v, w));

    PolySite a = site(1, tp(-1, 3), tp(2, 1)), b = site(2, tp(-1, 4), tp(3, 2)), d = site(3, tp(1, 3), tp(-2, 1));
    CircleCenter ci = circle_center(a, b, d);
    CHECK(!ci.center.is_finite());
    CHECK(ci.clockwise);
    CHECK(positive_radius(a, b, d));

    CircleCenter k = circle_center(site(1, 0, 0), site(2, 2, 0), site(3, 0, 2));
    CHECK(k.center == ExtendedPoint{ExtendedRational(1), ExtendedRational(1)});
    CHECK(!positive_radius(site(1, T, 0), site(2, 0, T), site(3, -T, 0)));
}

TEST_CASE("in circle") {
    PolySite u = site(1, 0, -T), v = site(2, -T, 0), w = site(3, T - tp(1, 2), tp(-2, 1));
    Poly I = incircle_poly(u, w, v, site(4, 0, 0));
    REQUIRE(ruling(I));
    CHECK(ruling(I)->coeff == 4);
    CHECK(ruling(I)->degree == 4);
    CHECK(in_circle(u, w, v, site(4, 0, 0)) == InCircle::Outside);
    // argument order does not matter
    CHECK(in_circle(u, v, w, site(4, 0, 0)) == InCircle::Outside);
    CHECK(in_circle(site(1, T, 0), site(2, 0, T), site(3, -T, 0), site(4, 0, -T)) == InCircle::Cocircular);
}

TEST_CASE("general position") {
    CHECK(!general_position(load_sites("expolsites.json")));
    CHECK(!general_position(load_sites("ex20.json")));
    SiteSet bad;
    bad.sites = {site(1, 0, 0), site(2, T, 0), site(3, tp(2, 1), 0)};
    auto v = general_position(bad);
    REQUIRE(v);
    CHECK(v->kind == GPViolation::Kind::Collinear);
    CHECK_THROWS_AS(require_general_position(bad), DomainError);
}

TEST_CASE("site order") {
    CHECK(site_order(site(1, tp(2, 2), T), site(2, T, T)) < 0);
    CHECK(site_order(site(1, T, T), site(2, T, T)) == 0);
    CHECK(site_order(site(1, T, tp(1, 2)), site(2, T, T)) < 0);
}

TEST_CASE("property: orientation agrees with small t evaluation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    auto rp = [&] { return Poly({Rational(c(rng)), Rational(c(rng)), Rational(c(rng))}); };
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
        PolySite a = site(1, rp(), rp()), b = site(2, rp(), rp()), d = site(3, rp(), rp());
        Poly D = collinearity_poly(a, b, d);
        if (D.is_zero()) {
            CHECK(orientation(a, b, d) == Orientation::Collinear);
            continue;
        }
        // far below every root of D
        Rational t0(1, 100000);
        int s = sign(D.eval(t0));
        CHECK((orientation(a, b, d) == Orientation::Left) == (s > 0));
        // antisymmetry
        Orientation o = orientation(b, a, d);
        CHECK(o == (s > 0 ? Orientation::Right : Orientation::Left));
        ++checked;
    }
    CHECK(checked > 100);
}
