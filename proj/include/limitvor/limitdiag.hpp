#pragma once

#include "limitvor/geometry.hpp"
#include "limitvor/hull.hpp"
#include "limitvor/sites.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace limitvor {

// Clockwise labels, rotated to start at the smallest.
struct OrientedTriple {
    int a = 0, b = 0, c = 0;

    static OrientedTriple make(int a, int b, int c);
    bool contains(int l) const { return a == l || b == l || c == l; }
    // True if x -> y is a step of the cycle a -> b -> c -> a.
    bool has_step(int x, int y) const;
    friend bool operator==(const OrientedTriple& l, const OrientedTriple& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const OrientedTriple& l, const OrientedTriple& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

using TypeSet = std::vector<OrientedTriple>;

TypeSet compute_type(const SiteSet& s);

struct DelaunayEdge {
    int u = 0, v = 0;  // u < v
    int multiplicity = 0;
};

struct AbstractDelaunayGraph {
    std::vector<int> vertices;
    std::vector<DelaunayEdge> edges;

    int multiplicity(int u, int v) const;
    std::vector<std::pair<int, int>> hull_edges() const;
};

AbstractDelaunayGraph delaunay_graph(const TypeSet& t);

// Points and one direction per unordered pair (stored for i < j as the
// direction from i to j).
struct GammaDataSet {
    std::vector<int> labels;
    std::vector<Pt> points;
    std::map<std::pair<int, int>, DirectionVector> dirs;

    std::size_t size() const { return labels.size(); }
    std::size_t index_of(int label) const;
    const Pt& point(int label) const { return points[index_of(label)]; }
    DirectionVector dir(int i, int j) const;
    void set_dir(int i, int j, const DirectionVector& d);
    // Adds the forced direction for every pair of distinct points lacking one.
    void fill_point_directions();
    // Distinct points need a direction pointing from p_i to p_j.
    void validate() const;
};

struct HalfPlane {
    DirectionVector normal;
    Pt base;

    Ineq ineq() const { return half_plane_ineq(normal, base); }
    bool contains(const Pt& p) const { return sgn(ineq().eval(p)) <= 0; }
};

HalfPlane half_plane(const GammaDataSet& g, int i, int j);
LineKey bisector(const GammaDataSet& g, int i, int j);

enum class CellKind { Empty, Point, Segment, Ray, Line, ConvexRegion };
const char* cell_kind_name(CellKind k);

struct Cell {
    int label = 0;
    CellKind kind = CellKind::Empty;
    Polygon region;  // clipped to the diagram box
    std::vector<Pt> vertices;
    std::vector<DirectionVector> rays;
};

struct OutsideEdge {
    int i = 0, j = 0;
    ExtendedPoint from;
    ExtendedPoint to;
    std::optional<DirectionVector> ray;
};

struct LimitDiagram {
    Box box;
    std::vector<Cell> cells;
    Skeleton skeleton;
    std::vector<OutsideEdge> outside_edges;

    const Cell& cell(int label) const;
};

// Box holding all points, bisection points and bisector crossings strictly inside.
Box gamma_box(const GammaDataSet& g);
Cell classify_cell(int label, const Polygon& region, const Box& box);
void add_cell_boundary(Skeleton& sk, const Cell& c, const Box& box);

LimitDiagram voronoi_from_gamma(const GammaDataSet& g);
GammaDataSet gamma_of(const SiteSet& s);
LimitDiagram zero_cluster_shape(const SiteSet& s);

struct ClusterLocation {
    Pt location;
    std::vector<int> labels;
};

std::vector<ClusterLocation> cluster_locations(const SiteSet& s);
SiteSet sub_siteset(const SiteSet& s, const std::vector<int>& labels);
LimitDiagram plug(const SiteSet& s);
// Location-diagram skeleton joined with each cluster's direction-hull rays
// clipped to its location cell; assembled without half-plane cells of sites.
Skeleton plug_edge_list(const SiteSet& s);

std::vector<OutsideEdge> outside_edges(const SiteSet& s);

GammaDataSet camera_extend(const GammaDataSet& g, const Rational& N);

// Floating-point sampling and Hausdorff distances.
struct Pt2 {
    double x = 0, y = 0;
    friend bool operator==(const Pt2& a, const Pt2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Pt2& a, const Pt2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

struct BBox {
    double x0 = -1, y0 = -1, x1 = 1, y1 = 1;
    double diagonal() const;
};

struct Seg2 {
    Pt2 a, b;
};

// Skeleton elements clipped to the bbox, as float segments (points as a == b).
std::vector<Seg2> skeleton_segments(const Skeleton& sk, const BBox& bb);
// Samples at integer multiples of step along each line, measured from the foot
// of the perpendicular from the origin, plus element ends.
std::vector<Pt2> skeleton_sample(const Skeleton& sk, const BBox& bb, double step);
double hausdorff(const std::vector<Pt2>& a, const std::vector<Pt2>& b);
// Samples of each side against the exact segments of the other.
double hausdorff_semi(const std::vector<Pt2>& sa, const std::vector<Seg2>& ea, const std::vector<Pt2>& sb,
                      const std::vector<Seg2>& eb);

// Continuity probe. The limit data set is the t -> 0 limit of a_i + t b_i,
// where b_i = w_c + v_i: w_c a per-cluster drift, v_i fixed relative velocities
// that give the directions inside coincident clusters.
struct ProbeData {
    std::vector<int> labels;
    std::vector<Pt> a;
    std::vector<Pt> v;
};

GammaDataSet probe_limit(const ProbeData& d);
GammaDataSet probe_at(const ProbeData& d, const std::vector<Pt>& b, const Rational& delta);
ProbeData random_probe_data(std::uint64_t seed, int n);
// Without velocities only clusters of at most two points can be realized.
ProbeData probe_data_from_gamma(const GammaDataSet& g, const std::optional<std::vector<Pt>>& velocities);

struct ProbeResult {
    std::vector<Rational> deltas;
    std::vector<double> h;
    bool non_increasing = true;
    bool camera_fixed = true;
};

ProbeResult continuity_probe(const ProbeData& d, const Rational& N, const std::vector<Rational>& deltas,
                             std::uint64_t seed, int samples);

}  // namespace limitvor
