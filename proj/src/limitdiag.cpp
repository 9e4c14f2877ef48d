#include "limitvor/limitdiag.hpp"

#include "limitvor/errors.hpp"
#include "limitvor/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace limitvor {

OrientedTriple OrientedTriple::make(int a, int b, int c) {
    if (b < a && b < c) return OrientedTriple{b, c, a};
    if (c < a && c < b) return OrientedTriple{c, a, b};
    return OrientedTriple{a, b, c};
}

bool OrientedTriple::has_step(int x, int y) const {
    return (x == a && y == b) || (x == b && y == c) || (x == c && y == a);
}

TypeSet compute_type(const SiteSet& s) {
    require_general_position(s);
    const auto& p = s.sites;
    std::size_t n = p.size();
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});

    std::vector<std::optional<OrientedTriple>> found(triples.size());
    parallel_for(triples.size(), [&](std::size_t t) {
        auto [i, j, k] = triples[t];
        const PolySite *u = &p[i], *v = &p[j], *w = &p[k];
        if (orientation(*u, *v, *w) == Orientation::Left) std::swap(v, w);
        for (std::size_t q = 0; q < n; ++q) {
            if (q == i || q == j || q == k) continue;
            if (in_circle(*u, *v, *w, p[q]) == InCircle::Inside) return;
        }
        found[t] = OrientedTriple::make(u->label, v->label, w->label);
    });

    TypeSet out;
    for (auto& f : found)
        if (f) out.push_back(*f);
    std::sort(out.begin(), out.end());
    return out;
}

int AbstractDelaunayGraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges)
        if (e.u == u && e.v == v) return e.multiplicity;
    return 0;
}

std::vector<std::pair<int, int>> AbstractDelaunayGraph::hull_edges() const {
    std::vector<std::pair<int, int>> r;
    for (const auto& e : edges)
        if (e.multiplicity == 1) r.emplace_back(e.u, e.v);
    return r;
}

AbstractDelaunayGraph delaunay_graph(const TypeSet& t) {
    std::set<int> verts;
    std::map<std::pair<int, int>, int> mult;
    auto add = [&](int x, int y) { ++mult[{std::min(x, y), std::max(x, y)}]; };
    for (const auto& tr : t) {
        verts.insert({tr.a, tr.b, tr.c});
        add(tr.a, tr.b);
        add(tr.b, tr.c);
        add(tr.c, tr.a);
    }
    AbstractDelaunayGraph g;
    g.vertices.assign(verts.begin(), verts.end());
    for (const auto& [k, m] : mult) g.edges.push_back(DelaunayEdge{k.first, k.second, m});
    return g;
}

std::size_t GammaDataSet::index_of(int label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw DomainError(ErrorKind::InvalidInput, "unknown label " + std::to_string(label));
}

DirectionVector GammaDataSet::dir(int i, int j) const {
    auto it = dirs.find({std::min(i, j), std::max(i, j)});
    if (it == dirs.end())
        throw DomainError(ErrorKind::InvalidInput,
                          "no direction for pair " + std::to_string(i) + "," + std::to_string(j));
    return i < j ? it->second : it->second.negated();
}

void GammaDataSet::set_dir(int i, int j, const DirectionVector& d) {
    if (i == j) throw DomainError(ErrorKind::InvalidInput, "direction of a label to itself");
    if (i < j) dirs[{i, j}] = d;
    else dirs[{j, i}] = d.negated();
}

void GammaDataSet::fill_point_directions() {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) {
            int li = labels[i], lj = labels[j];
            if (points[i] == points[j]) continue;
            if (dirs.count({std::min(li, lj), std::max(li, lj)})) continue;
            set_dir(li, lj, DirectionVector::primitive(points[j].x - points[i].x, points[j].y - points[i].y));
        }
}

void GammaDataSet::validate() const {
    if (labels.size() != points.size()) throw DomainError(ErrorKind::InvalidInput, "labels and points differ in size");
    std::set<int> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw DomainError(ErrorKind::InvalidInput, "duplicate labels");
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) {
            DirectionVector d = dir(labels[i], labels[j]);
            if (points[i] == points[j]) continue;
            auto want = DirectionVector::primitive(points[j].x - points[i].x, points[j].y - points[i].y);
            if (d != want)
                throw DomainError(ErrorKind::InvalidInput, "direction " + std::to_string(labels[i]) + "," +
                                                               std::to_string(labels[j]) +
                                                               " not along the point difference");
        }
}

HalfPlane half_plane(const GammaDataSet& g, int i, int j) {
    const Pt& a = g.point(i);
    const Pt& b = g.point(j);
    return HalfPlane{g.dir(i, j), Pt{(a.x + b.x) / 2, (a.y + b.y) / 2}};
}

LineKey bisector(const GammaDataSet& g, int i, int j) { return line_from_ineq(half_plane(g, i, j).ineq()); }

const char* cell_kind_name(CellKind k) {
    switch (k) {
    case CellKind::Empty: return "empty";
    case CellKind::Point: return "point";
    case CellKind::Segment: return "segment";
    case CellKind::Ray: return "ray";
    case CellKind::Line: return "line";
    case CellKind::ConvexRegion: return "region";
    }
    return "?";
}

const Cell& LimitDiagram::cell(int label) const {
    for (const auto& c : cells)
        if (c.label == label) return c;
    throw DomainError(ErrorKind::InvalidInput, "no cell for label " + std::to_string(label));
}

Box gamma_box(const GammaDataSet& g) {
    // Only containment matters, so extremes are found in doubles with an error
    // bound; badly conditioned pairs go exact. Integer corners keep clipping cheap.
    double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
    auto take = [&](double x, double y, double err) {
        lo_x = std::min(lo_x, x - err);
        hi_x = std::max(hi_x, x + err);
        lo_y = std::min(lo_y, y - err);
        hi_y = std::max(hi_y, y + err);
    };
    auto take_exact = [&](const Pt& p) {
        double x = to_double(p.x), y = to_double(p.y);
        take(x, y, 1e-12 * (std::abs(x) + std::abs(y)));
    };
    std::size_t n = g.size();
    std::vector<std::vector<Ineq>> lines(n, std::vector<Ineq>(n));
    for (const Pt& p : g.points) take_exact(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            HalfPlane h = half_plane(g, g.labels[i], g.labels[j]);
            take_exact(h.base);
            lines[i][j] = lines[j][i] = h.ineq();
        }
    // a vertex of cell i lies on two bisectors through i, so only those pairs matter
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (j == i || k == i) continue;
                const Ineq& l1 = lines[i][j];
                const Ineq& l2 = lines[i][k];
                if (l1.a * l2.b == l1.b * l2.a) continue;
                double a1 = to_double(l1.a), b1 = to_double(l1.b), c1 = to_double(l1.c);
                double a2 = to_double(l2.a), b2 = to_double(l2.b), c2 = to_double(l2.c);
                double det = a1 * b2 - b1 * a2, scale = std::abs(a1 * b2) + std::abs(b1 * a2);
                if (std::abs(det) > 1e-6 * scale) {
                    double x = (c1 * b2 - b1 * c2) / det, y = (a1 * c2 - c1 * a2) / det;
                    double terms = std::abs(c1 * b2) + std::abs(b1 * c2) + std::abs(a1 * c2) + std::abs(c1 * a2);
                    take(x, y, 1e-9 * (terms + (std::abs(x) + std::abs(y)) * scale) / std::abs(det));
                } else {
                    Pt x;
                    line_intersection(l1, l2, x);
                    take_exact(x);
                }
            }
    if (!(lo_x <= hi_x)) return Box{-1, -1, 1, 1};
    double m = std::max(1.0, std::ceil(std::max(hi_x - lo_x, hi_y - lo_y)));
    return Box{Rational(std::floor(lo_x) - m), Rational(std::floor(lo_y) - m), Rational(std::ceil(hi_x) + m),
               Rational(std::ceil(hi_y) + m)};
}

namespace {

DirectionVector dir_between(const Pt& from, const Pt& to) {
    return DirectionVector::primitive(to.x - from.x, to.y - from.y);
}

}  // namespace

Cell classify_cell(int label, const Polygon& region, const Box& box) {
    Cell c;
    c.label = label;
    c.region = simplify(region);
    const Polygon& p = c.region;
    switch (affine_dim(p)) {
    case -1: c.kind = CellKind::Empty; break;
    case 0:
        c.kind = CellKind::Point;
        c.vertices = p;
        break;
    case 1: {
        bool ba = box.on_boundary(p[0]), bb = box.on_boundary(p[1]);
        if (!ba && !bb) {
            c.kind = CellKind::Segment;
            c.vertices = p;
        } else if (ba && bb) {
            c.kind = CellKind::Line;
            c.rays = {dir_between(p[0], p[1]), dir_between(p[1], p[0])};
        } else {
            c.kind = CellKind::Ray;
            const Pt& in = ba ? p[1] : p[0];
            const Pt& out = ba ? p[0] : p[1];
            c.vertices = {in};
            c.rays = {dir_between(in, out)};
        }
        break;
    }
    default: {
        c.kind = CellKind::ConvexRegion;
        std::size_t n = p.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Pt& a = p[i];
            const Pt& b = p[(i + 1) % n];
            if (!box.on_boundary(a)) c.vertices.push_back(a);
            bool ba = box.on_boundary(a), bb = box.on_boundary(b);
            if (ba && bb) {
                if (!box.same_side(a, b)) {
                    c.rays.push_back(dir_between(a, b));
                    c.rays.push_back(dir_between(b, a));
                }
            } else if (ba) {
                c.rays.push_back(dir_between(b, a));
            } else if (bb) {
                c.rays.push_back(dir_between(a, b));
            }
        }
        break;
    }
    }
    return c;
}

void add_cell_boundary(Skeleton& sk, const Cell& c, const Box& box) {
    const Polygon& p = c.region;
    switch (c.kind) {
    case CellKind::Empty: return;
    case CellKind::Point: sk.add_point(p[0]); return;
    case CellKind::Segment:
    case CellKind::Ray:
    case CellKind::Line: sk.add_segment(p[0], p[1], box); return;
    case CellKind::ConvexRegion:
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Pt& a = p[i];
            const Pt& b = p[(i + 1) % p.size()];
            if (box.same_side(a, b)) continue;
            sk.add_segment(a, b, box);
        }
        return;
    }
}

namespace {

Polygon clip_all(Polygon poly, const std::vector<Ineq>& hs) {
    for (const auto& h : hs) {
        poly = clip(poly, h);
        if (poly.empty()) break;
    }
    return poly;
}

LimitDiagram assemble(const Box& box, std::vector<Cell> cells, const std::vector<int>& boundary_labels) {
    LimitDiagram d;
    d.box = box;
    d.cells = std::move(cells);
    for (const auto& c : d.cells)
        if (std::find(boundary_labels.begin(), boundary_labels.end(), c.label) != boundary_labels.end())
            add_cell_boundary(d.skeleton, c, box);
    d.skeleton.normalize();
    return d;
}

std::vector<Ineq> gamma_constraints(const GammaDataSet& g, int i) {
    std::vector<Ineq> hs;
    for (int j : g.labels)
        if (j != i) hs.push_back(half_plane(g, i, j).ineq());
    return hs;
}

GammaDataSet gamma_unchecked(const SiteSet& s) {
    GammaDataSet g;
    for (const auto& p : s.sites) {
        g.labels.push_back(p.label);
        auto [x, y] = site_at_zero(p);
        g.points.push_back(Pt{x, y});
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            g.set_dir(s.sites[i].label, s.sites[j].label, direction(s.sites[i], s.sites[j]));
    return g;
}

}  // namespace

LimitDiagram voronoi_from_gamma(const GammaDataSet& g) {
    if (g.size() < 2) throw DomainError(ErrorKind::InvalidInput, "a diagram needs at least two points");
    Box box = gamma_box(g);
    std::vector<Cell> cells(g.size());
    parallel_for(g.size(), [&](std::size_t i) {
        int l = g.labels[i];
        cells[i] = classify_cell(l, clip_all(box_polygon(box), gamma_constraints(g, l)), box);
    });
    return assemble(box, std::move(cells), g.labels);
}

GammaDataSet gamma_of(const SiteSet& s) {
    require_general_position(s);
    return gamma_unchecked(s);
}

namespace {

SiteSet translated(const SiteSet& s, const Pt& by) {
    SiteSet r = s;
    for (auto& p : r.sites) {
        p.x -= Poly(by.x);
        p.y -= Poly(by.y);
    }
    return r;
}

// Per label constraints of a cluster's zero-cluster shape: DH members are cut by
// their DH neighbours, every other site by all cluster half-planes.
std::map<int, std::vector<Ineq>> cluster_constraints(const SiteSet& cluster, const GammaDataSet& g) {
    std::map<int, std::vector<Ineq>> out;
    CircuitHull dh = direction_hull(cluster);
    std::size_t m = dh.labels.size();
    for (const auto& p : cluster.sites) {
        auto it = std::find(dh.labels.begin(), dh.labels.end(), p.label);
        std::vector<Ineq> hs;
        if (it == dh.labels.end()) {
            for (const auto& q : cluster.sites)
                if (q.label != p.label) hs.push_back(half_plane(g, p.label, q.label).ineq());
        } else {
            std::size_t k = static_cast<std::size_t>(it - dh.labels.begin());
            int prev = dh.labels[(k + m - 1) % m], next = dh.labels[(k + 1) % m];
            hs.push_back(half_plane(g, p.label, next).ineq());
            if (prev != next) hs.push_back(half_plane(g, p.label, prev).ineq());
        }
        out[p.label] = std::move(hs);
    }
    return out;
}

}  // namespace

LimitDiagram zero_cluster_shape(const SiteSet& s) {
    if (!is_zero_cluster(s)) throw DomainError(ErrorKind::NotZeroCluster, "sites do not all start at the origin");
    require_general_position(s);
    GammaDataSet g = gamma_unchecked(s);
    auto cons = cluster_constraints(s, g);
    Box box{-1, -1, 1, 1};
    std::vector<Cell> cells;
    for (const auto& p : s.sites)
        cells.push_back(classify_cell(p.label, clip_all(box_polygon(box), cons[p.label]), box));
    return assemble(box, std::move(cells), direction_hull(s).labels);
}

std::vector<ClusterLocation> cluster_locations(const SiteSet& s) {
    std::map<Pt, std::vector<int>> groups;
    for (const auto& p : s.sites) {
        auto [x, y] = site_at_zero(p);
        groups[Pt{x, y}].push_back(p.label);
    }
    std::vector<ClusterLocation> out;
    for (auto& [pt, ls] : groups) {
        std::sort(ls.begin(), ls.end());
        out.push_back(ClusterLocation{pt, ls});
    }
    return out;
}

SiteSet sub_siteset(const SiteSet& s, const std::vector<int>& labels) {
    SiteSet r;
    for (int l : labels) r.sites.push_back(s.by_label(l));
    return r;
}

namespace {

GammaDataSet location_gamma(const std::vector<ClusterLocation>& locs) {
    GammaDataSet g;
    for (std::size_t i = 0; i < locs.size(); ++i) {
        g.labels.push_back(static_cast<int>(i + 1));
        g.points.push_back(locs[i].location);
    }
    g.fill_point_directions();
    return g;
}

}  // namespace

LimitDiagram plug(const SiteSet& s) {
    require_general_position(s);
    GammaDataSet g = gamma_unchecked(s);
    Box box = gamma_box(g);
    auto locs = cluster_locations(s);
    GammaDataSet lg = location_gamma(locs);

    std::vector<Cell> cells;
    for (std::size_t j = 0; j < locs.size(); ++j) {
        Polygon vloc = clip_all(box_polygon(box), gamma_constraints(lg, lg.labels[j]));
        const auto& members = locs[j].labels;
        if (members.size() == 1) {
            cells.push_back(classify_cell(members[0], vloc, box));
            continue;
        }
        SiteSet cluster = translated(sub_siteset(s, members), locs[j].location);
        auto cons = cluster_constraints(cluster, g);
        for (int l : members) cells.push_back(classify_cell(l, clip_all(vloc, cons[l]), box));
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.label < b.label; });
    return assemble(box, std::move(cells), s.labels());
}

namespace {

Pt box_exit(const Pt& p, const DirectionVector& d, const Box& box) {
    std::optional<Rational> best;
    auto consider = [&](const Rational& s) {
        if (!best || s < *best) best = s;
    };
    if (d.dx > 0) consider((box.x1 - p.x) / d.dx);
    if (d.dx < 0) consider((box.x0 - p.x) / d.dx);
    if (d.dy > 0) consider((box.y1 - p.y) / d.dy);
    if (d.dy < 0) consider((box.y0 - p.y) / d.dy);
    return Pt{p.x + *best * d.dx, p.y + *best * d.dy};
}

}  // namespace

Skeleton plug_edge_list(const SiteSet& s) {
    require_general_position(s);
    auto locs = cluster_locations(s);
    Box box = gamma_box(gamma_unchecked(s));
    GammaDataSet lg = location_gamma(locs);

    Skeleton sk;
    if (locs.size() >= 2) sk = voronoi_from_gamma(lg).skeleton;

    for (std::size_t j = 0; j < locs.size(); ++j) {
        const auto& members = locs[j].labels;
        if (members.size() < 2) continue;
        const Pt& l = locs[j].location;
        std::vector<Ineq> vloc;
        if (locs.size() >= 2) vloc = gamma_constraints(lg, lg.labels[j]);
        CircuitHull dh = direction_hull(translated(sub_siteset(s, members), l));
        std::vector<DirectionVector> rays;
        if (dh.labels.size() == 2) {
            rays = {dh.edge_directions[0].rot90(), dh.edge_directions[0].rot90().negated()};
        } else {
            for (const auto& d : dh.edge_directions) rays.push_back(d.rot90());
        }
        for (const auto& d : rays) {
            Polygon seg = clip_all(Polygon{l, box_exit(l, d, box)}, vloc);
            sk.add_segment(seg[0], seg[1], box);
        }
    }
    sk.normalize();
    return sk;
}

std::vector<OutsideEdge> outside_edges(const SiteSet& s) {
    if (!is_zero_cluster(s)) throw DomainError(ErrorKind::NotZeroCluster, "sites do not all start at the origin");
    TypeSet t = compute_type(s);
    AbstractDelaunayGraph ad = delaunay_graph(t);
    std::map<OrientedTriple, CircleCenter> centers;
    for (const auto& tr : t) centers[tr] = circle_center(s.by_label(tr.a), s.by_label(tr.b), s.by_label(tr.c));

    std::vector<OutsideEdge> out;
    std::map<std::pair<int, int>, std::vector<ExtendedPoint>> inner;
    for (const auto& tr : t) {
        const ExtendedPoint& c = centers[tr].center;
        std::array<std::pair<int, int>, 3> steps{{{tr.a, tr.b}, {tr.b, tr.c}, {tr.c, tr.a}}};
        for (auto [x, y] : steps) {
            int lo = std::min(x, y), hi = std::max(x, y);
            if (ad.multiplicity(x, y) == 1) {
                DirectionVector d = direction(s.by_label(x), s.by_label(y)).rot90();
                ExtendedPoint far{d.dx == 0 ? c.cx : ExtendedRational::infinity(sign(d.dx)),
                                  d.dy == 0 ? c.cy : ExtendedRational::infinity(sign(d.dy))};
                out.push_back(OutsideEdge{lo, hi, c, far, d});
            } else if (!c.is_origin()) {
                inner[{lo, hi}].push_back(c);
            }
        }
    }
    ExtendedPoint origin{ExtendedRational(0), ExtendedRational(0)};
    for (const auto& [k, cs] : inner) {
        if (cs.size() >= 2) out.push_back(OutsideEdge{k.first, k.second, cs[0], cs[1], std::nullopt});
        else out.push_back(OutsideEdge{k.first, k.second, origin, cs[0], std::nullopt});
    }
    std::sort(out.begin(), out.end(), [](const OutsideEdge& a, const OutsideEdge& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    return out;
}

GammaDataSet camera_extend(const GammaDataSet& g, const Rational& N) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Pt& p = g.points[i];
        if (p.x * p.x + p.y * p.y > 1)
            throw DomainError(ErrorKind::PointOutsideUnitDisk, "point " + std::to_string(g.labels[i]));
    }
    if (!(N > 2 && N * N - 4 * N - 4 > 0)) throw DomainError(ErrorKind::NTooSmall, "N = " + N.get_str());
    GammaDataSet r = g;
    int next = g.labels.empty() ? 1 : *std::max_element(g.labels.begin(), g.labels.end()) + 1;
    for (const Pt& c : {Pt{-N, 0}, Pt{0, N}, Pt{N, 0}, Pt{0, -N}}) {
        r.labels.push_back(next++);
        r.points.push_back(c);
    }
    r.fill_point_directions();
    return r;
}

double BBox::diagonal() const { return std::hypot(x1 - x0, y1 - y0); }

namespace {

struct LineFrame {
    double fx, fy, ux, uy;
};

// Foot of the perpendicular from the origin and a unit direction, from exact data.
LineFrame frame(const LineKey& l) {
    Rational nn = l.a * l.a + l.b * l.b;
    Rational fx = l.a * l.c / nn, fy = l.b * l.c / nn;
    double len = std::sqrt(to_double(nn));
    return LineFrame{to_double(fx), to_double(fy), -to_double(l.b) / len, to_double(l.a) / len};
}

// Parameter range of the line inside the bbox; false if it misses.
bool bbox_range(const LineFrame& f, const BBox& bb, double& lo, double& hi) {
    lo = -std::numeric_limits<double>::infinity();
    hi = std::numeric_limits<double>::infinity();
    auto slab = [&](double p, double u, double a, double b) {
        if (u == 0) return p >= a && p <= b;
        double s1 = (a - p) / u, s2 = (b - p) / u;
        if (s1 > s2) std::swap(s1, s2);
        lo = std::max(lo, s1);
        hi = std::min(hi, s2);
        return true;
    };
    if (!slab(f.fx, f.ux, bb.x0, bb.x1)) return false;
    if (!slab(f.fy, f.uy, bb.y0, bb.y1)) return false;
    return lo <= hi;
}

double to_param(const LineFrame& f, const LineKey& l, const ExtendedRational& e) {
    // The exact parameter is x (or y for vertical lines); s moves along u.
    double u = l.vertical() ? f.uy : f.ux;
    if (e.is_infinite()) {
        int sg = e.sign() * (u > 0 ? 1 : -1);
        return sg > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    }
    Pt p = l.at(e.value());
    return (to_double(p.x) - f.fx) * f.ux + (to_double(p.y) - f.fy) * f.uy;
}

template <class F>
void for_each_piece(const Skeleton& sk, const BBox& bb, F&& fn) {
    for (const auto& [l, ivs] : sk.lines) {
        LineFrame f = frame(l);
        double blo, bhi;
        if (!bbox_range(f, bb, blo, bhi)) continue;
        for (const auto& iv : ivs) {
            double a = to_param(f, l, iv.lo), b = to_param(f, l, iv.hi);
            if (a > b) std::swap(a, b);
            a = std::max(a, blo);
            b = std::min(b, bhi);
            if (a > b) continue;
            fn(f, a, b);
        }
    }
}

bool inside(const BBox& bb, const Pt2& p) { return p.x >= bb.x0 && p.x <= bb.x1 && p.y >= bb.y0 && p.y <= bb.y1; }

Pt2 point_of(const Pt& p) { return Pt2{to_double(p.x), to_double(p.y)}; }

double seg_dist(const Pt2& p, const Seg2& s) {
    double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
    double l2 = dx * dx + dy * dy;
    double t = l2 == 0 ? 0 : ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / l2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (s.a.x + t * dx), p.y - (s.a.y + t * dy));
}

}  // namespace

std::vector<Seg2> skeleton_segments(const Skeleton& sk, const BBox& bb) {
    std::vector<Seg2> out;
    for_each_piece(sk, bb, [&](const LineFrame& f, double a, double b) {
        out.push_back(Seg2{{f.fx + a * f.ux, f.fy + a * f.uy}, {f.fx + b * f.ux, f.fy + b * f.uy}});
    });
    for (const auto& p : sk.points) {
        Pt2 q = point_of(p);
        if (inside(bb, q)) out.push_back(Seg2{q, q});
    }
    return out;
}

std::vector<Pt2> skeleton_sample(const Skeleton& sk, const BBox& bb, double step) {
    if (!(step > 0)) throw DomainError(ErrorKind::InvalidInput, "sampling step must be positive");
    if (sk.empty()) throw DomainError(ErrorKind::EmptySkeleton, "nothing to sample");
    std::vector<Pt2> out;
    for_each_piece(sk, bb, [&](const LineFrame& f, double a, double b) {
        auto at = [&](double s) { return Pt2{f.fx + s * f.ux, f.fy + s * f.uy}; };
        out.push_back(at(a));
        for (double k = std::ceil(a / step); k * step <= b; k += 1) out.push_back(at(k * step));
        out.push_back(at(b));
    });
    for (const auto& p : sk.points) {
        Pt2 q = point_of(p);
        if (inside(bb, q)) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double hausdorff(const std::vector<Pt2>& a, const std::vector<Pt2>& b) {
    if (a.empty() || b.empty()) throw DomainError(ErrorKind::EmptySkeleton, "empty point cloud");
    auto directed = [](const std::vector<Pt2>& x, const std::vector<Pt2>& y) {
        double h = 0;
        for (const auto& p : x) {
            double d = std::numeric_limits<double>::infinity();
            for (const auto& q : y) d = std::min(d, std::hypot(p.x - q.x, p.y - q.y));
            h = std::max(h, d);
        }
        return h;
    };
    return std::max(directed(a, b), directed(b, a));
}

double hausdorff_semi(const std::vector<Pt2>& sa, const std::vector<Seg2>& ea, const std::vector<Pt2>& sb,
                      const std::vector<Seg2>& eb) {
    if (sa.empty() || sb.empty() || ea.empty() || eb.empty())
        throw DomainError(ErrorKind::EmptySkeleton, "empty skeleton inside the bbox");
    auto directed = [](const std::vector<Pt2>& x, const std::vector<Seg2>& y) {
        double h = 0;
        for (const auto& p : x) {
            double d = std::numeric_limits<double>::infinity();
            // once p is within h it cannot raise the max
            for (const auto& s : y) {
                d = std::min(d, seg_dist(p, s));
                if (d <= h) break;
            }
            h = std::max(h, d);
        }
        return h;
    };
    return std::max(directed(sa, eb), directed(sb, ea));
}

GammaDataSet probe_limit(const ProbeData& d) {
    GammaDataSet g;
    g.labels = d.labels;
    g.points = d.a;
    for (std::size_t i = 0; i < d.a.size(); ++i)
        for (std::size_t j = i + 1; j < d.a.size(); ++j)
            if (d.a[i] == d.a[j])
                g.set_dir(d.labels[i], d.labels[j], dir_between(d.v[i], d.v[j]));
    g.fill_point_directions();
    return g;
}

GammaDataSet probe_at(const ProbeData& d, const std::vector<Pt>& b, const Rational& delta) {
    GammaDataSet g;
    g.labels = d.labels;
    for (std::size_t i = 0; i < d.a.size(); ++i)
        g.points.push_back(Pt{d.a[i].x + delta * b[i].x, d.a[i].y + delta * b[i].y});
    for (std::size_t i = 0; i < d.a.size(); ++i)
        for (std::size_t j = i + 1; j < d.a.size(); ++j)
            if (g.points[i] == g.points[j])
                g.set_dir(d.labels[i], d.labels[j],
                          d.a[i] == d.a[j] ? dir_between(d.v[i], d.v[j]) : dir_between(d.a[i], d.a[j]));
    g.fill_point_directions();
    return g;
}

ProbeData random_probe_data(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-300, 300), vel(-2, 2);
    std::uniform_int_distribution<int> nclusters(1, n);
    int m = nclusters(rng);
    std::vector<Pt> centers;
    while (static_cast<int>(centers.size()) < m) {
        Pt c{Rational(coord(rng), 1000), Rational(coord(rng), 1000)};
        c.x.canonicalize();
        c.y.canonicalize();
        if (c.x * c.x + c.y * c.y > Rational(9, 100)) continue;
        if (std::find(centers.begin(), centers.end(), c) != centers.end()) continue;
        centers.push_back(c);
    }
    std::uniform_int_distribution<int> pick(0, m - 1);
    ProbeData d;
    for (int i = 0; i < n; ++i) {
        int c = i < m ? i : pick(rng);
        Pt v;
        for (;;) {
            v = Pt{vel(rng), vel(rng)};
            bool clash = false;
            for (std::size_t j = 0; j < d.a.size(); ++j)
                if (d.a[j] == centers[c] && d.v[j] == v) clash = true;
            if (!clash) break;
        }
        d.labels.push_back(i + 1);
        d.a.push_back(centers[c]);
        d.v.push_back(v);
    }
    return d;
}

ProbeData probe_data_from_gamma(const GammaDataSet& g, const std::optional<std::vector<Pt>>& velocities) {
    g.validate();
    ProbeData d;
    d.labels = g.labels;
    d.a = g.points;
    if (velocities) {
        if (velocities->size() != g.size())
            throw DomainError(ErrorKind::InvalidInput, "one velocity per point required");
        d.v = *velocities;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                if (g.points[i] != g.points[j]) continue;
                if (d.v[i] == d.v[j] || dir_between(d.v[i], d.v[j]) != g.dir(g.labels[i], g.labels[j]))
                    throw DomainError(ErrorKind::InvalidInput, "velocities disagree with the directions of " +
                                                                   std::to_string(g.labels[i]) + "," +
                                                                   std::to_string(g.labels[j]));
            }
        return d;
    }
    d.v.assign(g.size(), Pt{0, 0});
    std::vector<bool> done(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> mates;
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.points[j] == g.points[i]) mates.push_back(j);
        if (mates.size() > 1)
            throw DomainError(ErrorKind::InvalidInput, "clusters of three or more points need velocities");
        if (mates.size() == 1) {
            DirectionVector dv = g.dir(g.labels[i], g.labels[mates[0]]);
            d.v[mates[0]] = Pt{dv.dx, dv.dy};
            done[mates[0]] = true;
        }
    }
    return d;
}

namespace {

std::vector<Pt2> far_samples(const std::vector<Pt2>& s, double N) {
    std::vector<Pt2> r;
    for (const auto& p : s)
        if (std::hypot(p.x, p.y) > N) r.push_back(p);
    return r;
}

}  // namespace

ProbeResult continuity_probe(const ProbeData& d, const Rational& N, const std::vector<Rational>& deltas,
                             std::uint64_t seed, int samples) {
    if (samples < 1) throw DomainError(ErrorKind::InvalidInput, "at least one sample required");
    double n = to_double(N);
    BBox bb{-2 * n, -2 * n, 2 * n, 2 * n};
    double step = bb.diagonal() / 512;

    Skeleton base = voronoi_from_gamma(camera_extend(probe_limit(d), N)).skeleton;
    auto s0 = skeleton_sample(base, bb, step);
    auto e0 = skeleton_segments(base, bb);
    auto far0 = far_samples(s0, n);

    std::vector<std::vector<Pt>> drifts(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
        std::uniform_int_distribution<int> w(-1, 1);
        std::map<Pt, Pt> per_cluster;
        for (std::size_t i = 0; i < d.a.size(); ++i) {
            if (!per_cluster.count(d.a[i])) per_cluster[d.a[i]] = Pt{w(rng), w(rng)};
            const Pt& c = per_cluster[d.a[i]];
            drifts[static_cast<std::size_t>(k)].push_back(Pt{c.x + d.v[i].x, c.y + d.v[i].y});
        }
    }

    std::size_t jobs = deltas.size() * static_cast<std::size_t>(samples);
    std::vector<double> h(jobs, 0);
    std::vector<char> fixed(jobs, 1);
    parallel_for(jobs, [&](std::size_t job) {
        std::size_t di = job / static_cast<std::size_t>(samples), k = job % static_cast<std::size_t>(samples);
        Skeleton sk = voronoi_from_gamma(camera_extend(probe_at(d, drifts[k], deltas[di]), N)).skeleton;
        auto s1 = skeleton_sample(sk, bb, step);
        h[job] = hausdorff_semi(s0, e0, s1, skeleton_segments(sk, bb));
        fixed[job] = far_samples(s1, n) == far0;
    });

    ProbeResult r;
    r.deltas = deltas;
    for (std::size_t di = 0; di < deltas.size(); ++di) {
        double m = 0;
        for (std::size_t k = 0; k < static_cast<std::size_t>(samples); ++k) {
            m = std::max(m, h[di * static_cast<std::size_t>(samples) + k]);
            if (!fixed[di * static_cast<std::size_t>(samples) + k]) r.camera_fixed = false;
        }
        r.h.push_back(m);
        if (di > 0 && m > r.h[di - 1]) r.non_increasing = false;
    }
    return r;
}

}  // namespace limitvor
