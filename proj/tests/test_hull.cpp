#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace th;

TEST_CASE("20-site hulls") {
    SiteSet s = load_sites("ex20.json");
    CircuitHull cch = combinatorial_convex_hull(s);
    CHECK(canonical_cycle(cch.labels) == canonical_cycle({8, 4, 7, 3, 11, 9}));
    CircuitHull dh = direction_hull(s);
    CHECK(canonical_cycle(dh.labels) == canonical_cycle({8, 7, 3, 11, 9}));
    REQUIRE(dh.labels.size() == dh.edge_directions.size());
    for (std::size_t i = 0; i < dh.labels.size(); ++i) {
        int a = dh.labels[i], b = dh.labels[(i + 1) % dh.labels.size()];
        CHECK(dh.edge_directions[i] == direction(s.by_label(a), s.by_label(b)));
    }
}

TEST_CASE("expolsites hull") {
    SiteSet s = load_sites("expolsites.json");
    CHECK(canonical_cycle(combinatorial_convex_hull(s).labels) == std::vector<int>{1, 3, 2});
    CHECK(canonical_cycle(direction_hull(s).labels) == std::vector<int>{1, 3, 2});
    CHECK(is_zero_cluster(s));
    CHECK(!is_zero_cluster(load_sites("explug.json")));
}

TEST_CASE("canonical cycle") {
    CHECK(canonical_cycle({8, 4, 7}) == std::vector<int>{4, 7, 8});
    CHECK(canonical_cycle({}).empty());
}

TEST_CASE("property: hull of linear sites is the clockwise convex hull") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-50, 50);
    int done = 0;
    for (int it = 0; it < 60 && done < 30; ++it) {
        SiteSet s;
        for (int i = 1; i <= 7; ++i) {
            Rational x(c(rng)), y(c(rng));
            s.sites.push_back(site(i, Poly(x) * T, Poly(y) * T));
        }
        try {
            s.validate();
        } catch (const DomainError&) {
            continue;
        }
        if (general_position(s)) continue;
        CircuitHull h = combinatorial_convex_hull(s);
        // every consecutive hull pair has all other sites on its right
        for (std::size_t i = 0; i < h.labels.size(); ++i) {
            const PolySite& a = s.by_label(h.labels[i]);
            const PolySite& b = s.by_label(h.labels[(i + 1) % h.labels.size()]);
            for (const PolySite& p : s.sites)
                if (p.label != a.label && p.label != b.label) CHECK(orientation(a, b, p) == Orientation::Right);
        }
        // sites c t move along rays, no two hull edges share a direction, so DH = cCH
        CHECK(canonical_cycle(direction_hull(s).labels) == canonical_cycle(h.labels));
        ++done;
    }
    CHECK(done >= 20);
}
