#pragma once

#include "limitvor/korder.hpp"
#include "limitvor/limitdiag.hpp"
#include "limitvor/sites.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace limitvor {

inline constexpr double kPi = 3.14159265358979323846;

// (-pi, pi]
double wrap_angle(double a);
// [-pi/2, pi/2)
double wrap_half(double a);
double angle_dist(double a, double b);
double angle_dist_pi(double a, double b);
double deg(double rad);
double rad(double degrees);

// h^{ik}_{ij}: p_k = beta * rot_alpha(p_j - p_i) + p_i. beta may be +-inf.
struct Hook {
    double beta = 0;
    double alpha = 0;
};

Hook klein_swap(const Hook& h);
// h^{ij}_{ik} from h^{ik}_{ij}.
Hook reciprocal(const Hook& h);
double hook_dist(const Hook& a, const Hook& b);
// Distance between Klein classes.
double hook_dist_klein(const Hook& a, const Hook& b);

Hook hook_of(const Pt2& pi, const Pt2& pj, const Pt2& pk);

// XAH: pair angles mod pi, hooks up to Klein equivalence. FM2: angles mod 2pi, beta >= 0.
// Stored values are always directed representatives.
enum class AHMode { XAH, FM2 };
const char* ah_mode_name(AHMode m);

struct AHPoint {
    AHMode mode = AHMode::FM2;
    int n = 0;
    std::map<std::pair<int, int>, double> angles;  // i < j
    std::map<std::array<int, 3>, Hook> hooks;      // {i, j, k} -> h^{ik}_{ij}

    void set_angle(int i, int j, double a);
    void set_hook(int i, int j, int k, const Hook& h) { hooks[{i, j, k}] = h; }
    // Direction from p_i to p_j; alpha_ji = alpha_ij + pi.
    std::optional<double> angle(int i, int j) const;
    double angle_at(int i, int j) const;
    // Falls back to the reciprocal of h^{ij}_{ik}.
    std::optional<Hook> hook(int i, int j, int k) const;
    Hook hook_at(int i, int j, int k) const;
};

AHPoint ah_of_configuration(const std::vector<Pt2>& pts);

// One message per violated law; empty when consistent within tol.
std::vector<std::string> ratio_law_violations(const AHPoint& x, double tol = 1e-9);

struct Nest {
    int n = 0;
    std::vector<LabelMask> clusters;  // sorted by size then value

    static Nest make(int n, std::vector<LabelMask> nontrivial);
    static Nest trivial(int n);
    LabelMask top() const;
    bool contains(LabelMask c) const;
    LabelMask smallest_containing(LabelMask m) const;
    // Ordered by minimal label.
    std::vector<LabelMask> maximal_subclusters(LabelMask c) const;
    std::optional<LabelMask> parent(LabelMask c) const;
    // Top screen has depth 1.
    int depth(LabelMask c) const;
    std::vector<LabelMask> nontrivial() const;
    // Non-obvious clusters in angle-bracket notation, e.g. <{1,2,6},{3,5}>.
    std::string str() const;

    friend bool operator==(const Nest& a, const Nest& b) { return a.n == b.n && a.clusters == b.clusters; }
    friend bool operator!=(const Nest& a, const Nest& b) { return !(a == b); }
};

Nest nest_of(const AHPoint& x, double zero_tol = 1e-12);
Nest random_nest(std::mt19937_64& rng, int n, int extra_clusters);

enum class TagType { Top, Angle2a, Hook2b, Hook2c, Hook3 };
const char* tag_type_name(TagType t);

struct Tag {
    TagType type = TagType::Top;
    int site = 0;
    // Hooks: hinge i, from j, to k = site. Angle2a: alpha_{i k} with i = 1.
    int i = 0, j = 0, k = 0;
    LabelMask parent = 0;  // cluster where the tagged edge starts
    LabelMask child = 0;
    int depth = 0;         // edges from the root to parent
    int predecessor = 0;   // 0 for site 1

    bool is_hook() const { return type == TagType::Hook2b || type == TagType::Hook2c || type == TagType::Hook3; }
    bool is_explosion() const { return type == TagType::Hook2b || type == TagType::Hook2c; }
    std::string name() const;
};

struct HookedTree {
    Nest nest;
    std::vector<Tag> tags;  // tags[site - 1]

    const Tag& tag(int site) const { return tags.at(static_cast<std::size_t>(site - 1)); }
    int dom_dimension() const;
    std::vector<int> hooked_path(int site) const;
    // Sites ordered so that predecessors and hook references come first.
    std::vector<int> draw_order() const;
    int top_site() const;  // j_2 of the top cluster
};

HookedTree hooked_tree(const Nest& nest);
HookedTree hooked_tree(const AHPoint& x);

// Coordinates of Dom_n(x): the top angle and one hook per hook-tagged site.
struct DomPoint {
    double top = 0;
    std::map<int, Hook> hooks;
};

DomPoint tree_values(const HookedTree& t, const AHPoint& x);
DomPoint standard_form(const HookedTree& t, const DomPoint& d);
AHPoint standard_form(const AHPoint& x);

inline constexpr double kTauOrth = 1e-6;
inline constexpr double kTauSep = 1e-9;
inline constexpr double kTauRoundTrip = 1e-9;

bool is_valid(const HookedTree& t, const DomPoint& x_std, const DomPoint& q);

struct Screen {
    LabelMask cluster = 0;
    int depth = 1;
    double orientation = 0;
    std::vector<LabelMask> subclusters;
    std::map<int, Pt2> sites;
};

struct ScreenFill {
    std::vector<Screen> screens;  // parents before children
    DomPoint q;                   // representatives actually drawn

    const Screen& screen(LabelMask c) const;
};

bool is_accepted(const ScreenFill& fill, double tau = kTauSep);

// Steps 2 and 3 only.
ScreenFill draw_screens(const HookedTree& t, const DomPoint& q);
// XAH mode runs Step 1 against x_std; FM2 mode skips it. Throws InvalidQ.
ScreenFill draw(const HookedTree& t, const DomPoint& x_std, const DomPoint& q, AHMode mode);
ScreenFill draw(const AHPoint& x, const DomPoint& q);

// Throws NotAccepted, ReadOffUndefined.
AHPoint read(const Nest& nest, const ScreenFill& fill, AHMode mode);

// Full point with the given nest and tree values.
AHPoint realize(const Nest& nest, const DomPoint& tv, AHMode mode);

struct RoundTripReport {
    double max_error = 0;
    bool pass = false;
    std::string worst;
};

RoundTripReport roundtrip_check(const AHPoint& x, const DomPoint& q, double tol = kTauRoundTrip);

int zero_dom_ratios(const HookedTree& t, const DomPoint& tv, double zero_tol = 1e-12);
std::vector<AHPoint> fiber(const AHPoint& x, int max_zero = 12);
bool same_fm2_point(const AHPoint& a, const AHPoint& b, double tol = 1e-9);

struct RatioClass {
    enum class Kind { Zero, Finite, Infinite } kind = Kind::Finite;
    Rational value_sq;

    double value() const;
};

std::map<std::array<int, 3>, RatioClass> ratios_from_polysites(const SiteSet& s);
AHPoint chi(const SiteSet& s);
SiteSet normal_form_sites(const AHPoint& x, long denominator = 1000000);

struct ClickCell {
    std::vector<int> owner;
    std::vector<Pt2> polygon;
    std::vector<Pt2> rays;
};

struct PasteRay {
    std::vector<int> cluster;
    Pt2 from;
    Pt2 dir;
};

struct ClickableScreen {
    std::vector<int> cluster;
    double orientation = 0;
    std::vector<std::pair<int, Pt2>> sites;
    std::vector<ClickCell> cells;
    std::vector<PasteRay> paste_rays;
    std::vector<ClickableScreen> children;

    std::size_t screen_count() const;
};

ClickableScreen clickable_diagram(const AHPoint& x);

}  // namespace limitvor
