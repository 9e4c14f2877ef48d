#pragma once

#include "limitvor/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace limitvor {

// Bit i set means label i + 1 is in the set.
using LabelMask = std::uint32_t;

std::vector<int> mask_labels(LabelMask m);
LabelMask labels_mask(const std::vector<int>& labels);
int mask_size(LabelMask m);
std::string mask_str(LabelMask m);

struct StaticPointSet {
    std::vector<Pt> points;  // label i + 1 at index i

    std::size_t size() const { return points.size(); }
    // Throws GeneralPositionViolation / CoincidentPoints.
    void validate() const;
};

StaticPointSet random_gp_points(std::uint64_t seed, int n, int range = 1000);

struct CircleRecord {
    int a = 0, b = 0, c = 0;  // a < b < c
    Pt center;
    LabelMask inside = 0;
    int order = 0;
};

std::vector<CircleRecord> circles(const StaticPointSet& s);

// Box holding every circumcenter and midpoint strictly inside.
Box korder_box(const StaticPointSet& s);

struct CellInfo {
    bool nonempty = false;
    bool unbounded = false;   // a line separates A from the rest
    bool touches_box = false; // the clipped region reaches the box boundary
    Polygon region;
};

CellInfo cell_nonempty(LabelMask a, const StaticPointSet& s, const Box& box);
CellInfo cell_nonempty(LabelMask a, const StaticPointSet& s);
bool hulls_disjoint(const std::vector<Pt>& a, const std::vector<Pt>& b);

struct KVertex {
    int circle = 0;  // index into circles()
    bool is_new = false;
    Pt center;
    LabelMask cells[3] = {0, 0, 0};
};

struct KEdge {
    LabelMask left = 0, right = 0;  // left < right
    std::vector<int> vertices;      // indices into KDiagram::vertices
    // Direction leaving the single vertex of an unbounded edge.
    std::optional<std::pair<Rational, Rational>> ray;
};

struct KDiagram {
    int k = 0;
    std::vector<KVertex> vertices;
    std::vector<KEdge> edges;
    std::vector<LabelMask> cells;  // cells incident to a vertex

    std::size_t unbounded_edges() const;
};

// Per order k = 1..n-1; entry k - 1 holds V_k.
std::vector<KDiagram> all_order_diagrams(const StaticPointSet& s);

struct VoronoiPoset {
    int n = 0;
    std::vector<LabelMask> elements;  // sorted by size, then value; includes the empty set and [n]
    std::vector<char> unbounded;      // parallel to elements
    std::vector<char> touches_box;    // parallel to elements

    bool contains(LabelMask m) const;
    // Every nonempty element covers an element one smaller.
    bool graded() const;
};

VoronoiPoset voronoi_poset(const StaticPointSet& s);

struct CountVectors {
    int n = 0;
    std::vector<long> f;      // f_0..f_n
    std::vector<long> c;      // c_0..c_{n-3}
    std::vector<long> v;      // v_0..v_n, v_0 = v_n = 0
    std::vector<long> e;      // e_0..e_n, e_0 = e_n = 0
    std::vector<long> f_inf;  // f_0^inf..f_n^inf, ends 0
    std::vector<long> f_red;  // f~_k, k = 1..ceil(n/2)
    std::vector<long> c_red;  // c~_i, i = 0..floor((n-3)/2)

    long c_at(long i) const { return i >= 0 && i < static_cast<long>(c.size()) ? c[static_cast<std::size_t>(i)] : 0; }
};

CountVectors count_vectors(const StaticPointSet& s, const VoronoiPoset& p, const std::vector<CircleRecord>& circ,
                           const std::vector<KDiagram>& diagrams);

std::vector<long> reduced_f(const std::vector<long>& f, int n);
std::vector<long> reduced_c(const std::vector<long>& c, int n);

struct ReducedRow {
    std::vector<long> f;
    std::vector<long> c;
};

// Printed reduced vectors for 3 <= n <= 12.
std::optional<ReducedRow> reduced_table(int n);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SymmetryReport {
    CountVectors counts;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

SymmetryReport verify_symmetries(const StaticPointSet& s);

// Alternating sum A = sum_k (-1)^(k+1) f_k over k = 0..n.
long alternating_sum(const std::vector<long>& f);

// Smallest relabeled element list; equal for isomorphic posets.
std::vector<LabelMask> canonical_poset(const std::vector<LabelMask>& elements, int n);

}  // namespace limitvor
