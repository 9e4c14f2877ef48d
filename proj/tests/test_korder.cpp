#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace th;

TEST_CASE("label masks") {
    CHECK(mask_labels(labels_mask({3, 1})) == std::vector<int>{1, 3});
    CHECK(mask_size(labels_mask({1, 2, 7})) == 3);
}

TEST_CASE("reduced table rows") {
    auto r7 = reduced_table(7);
    REQUIRE(r7);
    CHECK(r7->f == std::vector<long>{8, 18, 24, 26});
    CHECK(r7->c == std::vector<long>{10, 16, 18});
    CHECK(!reduced_table(2));
    CHECK(reduced_f({1, 7, 11, 13, 13, 11, 7, 1}, 7).size() == 4);
}

TEST_CASE("n7 instance") {
    StaticPointSet s = points_from_json(load_json(data("n7.json")));
    SymmetryReport r = verify_symmetries(s);
    for (const CheckResult& c : r.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
    CHECK(r.counts.f_red == std::vector<long>{8, 18, 24, 26});
    CHECK(r.counts.c_red == std::vector<long>{10, 16, 18});
}

TEST_CASE("square-ish four points") {
    // no four cocircular; poset must be one of the two census shapes
    StaticPointSet s;
    s.points = {Pt{0, 0}, Pt{10, 1}, Pt{4, 9}, Pt{-3, 5}};
    s.validate();
    VoronoiPoset p = voronoi_poset(s);
    CountVectors c = count_vectors(s, p, circles(s), all_order_diagrams(s));
    bool a = c.f == std::vector<long>{1, 4, 5, 4, 1};
    bool b = c.f == std::vector<long>{1, 4, 6, 3, 1};
    CHECK((a || b));
    CHECK(p.graded());
}

TEST_CASE("validation rejects degenerate sets") {
    StaticPointSet s;
    s.points = {Pt{0, 0}, Pt{1, 1}, Pt{2, 2}};
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.points = {Pt{0, 0}, Pt{0, 0}, Pt{2, 3}};
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("property: identities on random sets") {
    for (int n = 3; n <= 7; ++n)
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            StaticPointSet s = random_gp_points(seed * 100 + n, n);
            SymmetryReport r = verify_symmetries(s);
            CHECK_MESSAGE(r.all_pass(), "n=" << n << " seed=" << seed);
            CHECK(std::abs(alternating_sum(r.counts.f)) % 2 == (n % 4 == 0 ? 1 : 0));
        }
}

TEST_CASE("canonical poset is relabeling invariant") {
    StaticPointSet s = random_gp_points(77, 5);
    StaticPointSet t;
    // reverse labels
    for (int i = 4; i >= 0; --i) t.points.push_back(s.points[static_cast<std::size_t>(i)]);
    CHECK(canonical_poset(voronoi_poset(s).elements, 5) == canonical_poset(voronoi_poset(t).elements, 5));
}
