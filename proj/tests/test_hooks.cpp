#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace th;

namespace {

LabelMask m(std::vector<int> l) { return labels_mask(l); }

Nest running_nest() { return Nest::make(6, {m({1, 2, 6}), m({3, 5})}); }

DomPoint running_tv() {
    DomPoint tv;
    tv.top = rad(-7);
    tv.hooks[2] = {0, rad(71)};
    tv.hooks[4] = {1.5, rad(50)};
    tv.hooks[5] = {0, rad(44)};
    tv.hooks[6] = {1, rad(-37)};
    return tv;
}

// x values: zero explosion ratios, positive type-3 ratios
DomPoint random_tv(std::mt19937_64& rng, const HookedTree& t) {
    std::uniform_real_distribution<double> ang(-kPi, kPi), beta(0.3, 2.0);
    DomPoint d;
    d.top = ang(rng);
    for (const Tag& g : t.tags)
        if (g.is_hook()) d.hooks[g.site] = Hook{g.is_explosion() ? 0.0 : beta(rng), ang(rng)};
    return d;
}

DomPoint random_q(std::mt19937_64& rng, const HookedTree& t) {
    std::uniform_real_distribution<double> ang(-kPi, kPi), beta(0.3, 2.0);
    std::bernoulli_distribution neg(0.5);
    DomPoint d;
    d.top = ang(rng);
    for (const Tag& g : t.tags)
        if (g.is_hook()) d.hooks[g.site] = Hook{neg(rng) ? -beta(rng) : beta(rng), ang(rng)};
    return d;
}

}  // namespace

TEST_CASE("hook basics") {
    Hook h = hook_of({0, 0}, {1, 0}, {0, 2});
    CHECK(h.beta == doctest::Approx(2));
    CHECK(h.alpha == doctest::Approx(kPi / 2));
    Hook id = hook_of({0, 0}, {1, 0}, {1, 0});
    CHECK(id.beta == doctest::Approx(1));
    CHECK(id.alpha == doctest::Approx(0));
    CHECK_THROWS_AS(hook_of({0, 0}, {0, 0}, {1, 0}), DomainError);
    Hook s = klein_swap(Hook{-1.92, rad(4)});
    CHECK(s.beta == doctest::Approx(1.92));
    CHECK(deg(s.alpha) == doctest::Approx(-176));
    Hook r = reciprocal(Hook{0, 0.3});
    CHECK(std::isinf(r.beta));
    CHECK(r.alpha == doctest::Approx(-0.3));
    CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
    CHECK(wrap_half(kPi / 2) == doctest::Approx(-kPi / 2));
}

TEST_CASE("running example nest and hooked tree") {
    AHPoint x = realize(running_nest(), running_tv(), AHMode::XAH);
    CHECK(nest_of(x) == running_nest());
    CHECK(nest_of(x).str() == "<{1,2,6},{3,5}>");
    HookedTree t = hooked_tree(x);
    CHECK(t.dom_dimension() == 9);
    std::vector<std::string> names;
    for (const Tag& g : t.tags) names.push_back(g.name());
    CHECK(names == std::vector<std::string>{"top", "h^{12}_{13}", "alpha_{1,3}", "h^{14}_{13}", "h^{35}_{31}",
                                            "h^{16}_{12}"});
    CHECK(t.tag(2).type == TagType::Hook2c);
    CHECK(t.tag(3).type == TagType::Angle2a);
    CHECK(t.tag(4).type == TagType::Hook3);
    CHECK(t.tag(5).type == TagType::Hook2b);
    CHECK(t.tag(6).type == TagType::Hook3);
    CHECK(ratio_law_violations(x).empty());
}

TEST_CASE("trivial nest tags") {
    HookedTree t = hooked_tree(Nest::trivial(4));
    std::vector<std::string> names;
    for (const Tag& g : t.tags) names.push_back(g.name());
    CHECK(names == std::vector<std::string>{"top", "alpha_{1,2}", "h^{13}_{12}", "h^{14}_{12}"});
}

TEST_CASE("nest rejects overlapping clusters") {
    CHECK_THROWS_AS(Nest::make(4, {m({1, 2}), m({2, 3})}), DomainError);
}

TEST_CASE("standard form rules") {
    HookedTree t = hooked_tree(running_nest());
    DomPoint d = running_tv();
    d.hooks[4] = {-1.92, rad(4)};
    d.hooks[5] = {0.5, rad(171)};
    DomPoint s = standard_form(t, d);
    CHECK(s.hooks[4].beta == doctest::Approx(1.92));
    CHECK(deg(s.hooks[4].alpha) == doctest::Approx(-176));
    CHECK(deg(s.hooks[5].alpha) == doctest::Approx(-9));
    CHECK(s.hooks[5].beta == doctest::Approx(-0.5));
    CHECK(deg(s.hooks[2].alpha) == doctest::Approx(71));
}

TEST_CASE("validity and acceptance") {
    AHPoint x = realize(running_nest(), running_tv(), AHMode::XAH);
    HookedTree t = hooked_tree(x);
    DomPoint xs = standard_form(t, tree_values(t, x));
    CHECK(is_valid(t, xs, xs));
    DomPoint bad = xs;
    bad.hooks[5].alpha += kPi / 2;
    CHECK(!is_valid(t, xs, bad));
    CHECK_THROWS_AS(draw(t, xs, bad, AHMode::XAH), DomainError);
    // site 4 dropped on site 3 of the other subcluster
    DomPoint clash = xs;
    clash.hooks[4] = {1, 0};
    ScreenFill f = draw(t, xs, clash, AHMode::XAH);
    CHECK(!is_accepted(f));
    CHECK_THROWS_AS(read(t.nest, f, AHMode::XAH), DomainError);
}

TEST_CASE("exdepth2 screens") {
    AHPoint x = chi(load_sites("exdepth2.json"));
    CHECK(nest_of(x).str() == "<{2,3,4},{3,4}>");
    ScreenFill f = draw(x, standard_form(hooked_tree(x), tree_values(hooked_tree(x), x)));
    REQUIRE(f.screens.size() == 3);
    CHECK(f.screens[0].depth == 1);
    CHECK(f.screens[1].depth == 2);
    CHECK(f.screens[2].depth == 3);
    ClickableScreen c = clickable_diagram(x);
    CHECK(c.screen_count() == 3);
    REQUIRE(c.children.size() == 1);
    CHECK(c.children[0].children.size() == 1);
}

TEST_CASE("exmoreplug clickable screens") {
    AHPoint x = chi(load_sites("exmoreplug.json"));
    CHECK(nest_of(x).str() == "<{3,7,12},{4,8,9,10,11}>");
    ClickableScreen c = clickable_diagram(x);
    CHECK(c.sites.size() == 6);
    CHECK(c.cells.size() == 6);
    REQUIRE(c.children.size() == 2);
    CHECK(c.children[0].cluster == std::vector<int>{3, 7, 12});
    CHECK(c.children[0].sites.size() == 3);
    CHECK(c.children[1].sites.size() == 5);
    CHECK(!c.paste_rays.empty());
    for (const PasteRay& p : c.paste_rays) CHECK(std::hypot(p.dir.x, p.dir.y) == doctest::Approx(1));
}

TEST_CASE("chi of distinct constants is trivial") {
    SiteSet s;
    s.sites = {site(1, 0, 0), site(2, 3, 1), site(3, -2, 5), site(4, 1, -4)};
    AHPoint x = chi(s);
    CHECK(nest_of(x) == Nest::trivial(4));
    CHECK(ratio_law_violations(x).empty());
    CHECK(fiber(standard_form(x)).size() >= 1);
}

TEST_CASE("ratios from polysites") {
    auto r = ratios_from_polysites(load_sites("exdepth2.json"));
    // beta^{23}_{21}: p3 reaches p2 faster than p1 does
    CHECK(r.at({2, 1, 3}).kind == RatioClass::Kind::Zero);
    CHECK(r.at({2, 3, 1}).kind == RatioClass::Kind::Infinite);
    CHECK(r.at({1, 2, 3}).kind == RatioClass::Kind::Finite);
    CHECK(r.at({1, 2, 3}).value() == doctest::Approx(1));
}

TEST_CASE("property: ratio laws on configurations and chi outputs") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int it = 0; it < 50; ++it) {
        std::vector<Pt2> pts;
        for (int i = 0; i < 5; ++i) pts.push_back({u(rng), u(rng)});
        CHECK(ratio_law_violations(ah_of_configuration(pts)).empty());
    }
    for (const char* f : {"exmoreplug.json", "exdepth2.json", "ex20.json"})
        CHECK(ratio_law_violations(chi(load_sites(f))).empty());
}

TEST_CASE("property: nests, tags, draw invariants, round trip") {
    std::mt19937_64 rng(2024);
    for (int n = 3; n <= 7; ++n) {
        int passed = 0, skipped = 0;
        for (int it = 0; it < 200; ++it) {
            Nest z = random_nest(rng, n, std::min(static_cast<int>(rng() % 3), n - 2));
            HookedTree t = hooked_tree(z);
            CHECK(t.tags.size() == static_cast<std::size_t>(n));
            CHECK(t.dom_dimension() == 2 * n - 3);
            AHPoint x;
            try {
                x = realize(z, random_tv(rng, t), AHMode::XAH);
            } catch (const DomainError&) {
                ++skipped;
                continue;
            }
            REQUIRE(nest_of(x) == z);
            // C_ij is the smallest cluster containing i and j
            Nest got = nest_of(x);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    LabelMask c = got.smallest_containing(m({i, j}));
                    for (int k = 1; k <= n; ++k)
                        if (k != i && k != j)
                            CHECK(((c >> (k - 1)) & 1u) == (std::abs(x.hook_at(i, k, j).beta) > 1e-12 ? 1u : 0u));
                }
            DomPoint xs = standard_form(t, tree_values(t, x));
            DomPoint q = random_q(rng, t);
            if (!is_valid(t, xs, q)) {
                ++skipped;
                continue;
            }
            ScreenFill f = draw(t, xs, q, AHMode::XAH);
            for (const Screen& s : f.screens) {
                REQUIRE(s.subclusters.size() >= 2);
                int a = __builtin_ctz(s.subclusters[0]) + 1, b = __builtin_ctz(s.subclusters[1]) + 1;
                CHECK(s.sites.at(a).x == 0);
                CHECK(s.sites.at(a).y == 0);
                CHECK(std::hypot(s.sites.at(b).x, s.sites.at(b).y) == doctest::Approx(1).epsilon(1e-12));
            }
            if (!is_accepted(f)) {
                ++skipped;
                continue;
            }
            RoundTripReport r = roundtrip_check(x, q);
            CHECK_MESSAGE(r.pass, "n=" << n << " " << z.str() << " err " << r.max_error << " at " << r.worst);
            ++passed;
        }
        CHECK(passed > 150);
    }
}

TEST_CASE("property: fiber sizes") {
    std::mt19937_64 rng(99);
    int seen[8] = {0};
    for (int it = 0; it < 120; ++it) {
        int n = 3 + static_cast<int>(rng() % 5);
        Nest z = random_nest(rng, n, std::min(static_cast<int>(rng() % 4), n - 2));
        HookedTree t = hooked_tree(z);
        DomPoint tv = random_tv(rng, t);
        AHPoint x;
        try {
            x = realize(z, tv, AHMode::XAH);
        } catch (const DomainError&) {
            continue;
        }
        int mz = zero_dom_ratios(t, tv);
        if (mz > 6) continue;
        CHECK(fiber(x).size() == (std::size_t{1} << (mz + 1)));
        ++seen[mz];
    }
    CHECK(seen[0] > 0);
    CHECK(seen[2] > 0);
}

TEST_CASE("property: chi of normal form sites keeps nest and hooks") {
    std::mt19937_64 rng(7);
    int done = 0;
    for (int it = 0; it < 60; ++it) {
        int n = 3 + static_cast<int>(rng() % 5);
        Nest z = random_nest(rng, n, std::min(static_cast<int>(rng() % 3), n - 2));
        HookedTree t = hooked_tree(z);
        AHPoint x;
        try {
            x = realize(z, random_tv(rng, t), AHMode::FM2);
        } catch (const DomainError&) {
            continue;
        }
        AHPoint y = chi(normal_form_sites(x));
        CHECK(nest_of(y) == z);
        for (const auto& [key, h] : x.hooks) {
            if (!std::isfinite(h.beta)) continue;
            Hook g = y.hook_at(key[0], key[1], key[2]);
            CHECK(std::abs(g.beta - h.beta) < 1e-4);
            CHECK(angle_dist(g.alpha, h.alpha) < 1e-4);
        }
        ++done;
    }
    CHECK(done > 40);
}
