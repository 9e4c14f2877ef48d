#include "limitvor/korder.hpp"

#include "limitvor/errors.hpp"
#include "limitvor/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace limitvor {

std::vector<int> mask_labels(LabelMask m) {
    std::vector<int> r;
    for (int i = 0; i < 32; ++i)
        if (m & (LabelMask(1) << i)) r.push_back(i + 1);
    return r;
}

LabelMask labels_mask(const std::vector<int>& labels) {
    LabelMask m = 0;
    for (int l : labels) {
        if (l < 1 || l > 32) throw DomainError(ErrorKind::InvalidInput, "label out of range: " + std::to_string(l));
        m |= LabelMask(1) << (l - 1);
    }
    return m;
}

int mask_size(LabelMask m) { return std::popcount(m); }

std::string mask_str(LabelMask m) {
    std::string s = "{";
    bool first = true;
    for (int l : mask_labels(m)) {
        if (!first) s += ",";
        s += std::to_string(l);
        first = false;
    }
    return s + "}";
}

namespace {

Rational cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational norm2(const Pt& p) { return p.x * p.x + p.y * p.y; }

Rational incircle(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    Rational ax = a.x - d.x, ay = a.y - d.y, bx = b.x - d.x, by = b.y - d.y, cx = c.x - d.x, cy = c.y - d.y;
    Rational a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

bool fits(const std::vector<Pt>& pts, const Pt& q) {
    std::size_t n = pts.size();
    for (const auto& p : pts)
        if (p == q) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cross(pts[i], pts[j], q) == 0) return false;
            for (std::size_t k = j + 1; k < n; ++k)
                if (incircle(pts[i], pts[j], pts[k], q) == 0) return false;
        }
    return true;
}

Pt circumcenter(const Pt& a, const Pt& b, const Pt& c) {
    Rational d = 2 * cross(a, b, c);
    Rational bx = b.x - a.x, by = b.y - a.y, cx = c.x - a.x, cy = c.y - a.y;
    Rational b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    return Pt{a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
}

}  // namespace

void StaticPointSet::validate() const {
    if (points.size() > 31) throw DomainError(ErrorKind::InvalidInput, "at most 31 points");
    std::vector<Pt> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (points[j] == points[i])
                throw DomainError(ErrorKind::CoincidentPoints,
                                  "points " + std::to_string(j + 1) + " and " + std::to_string(i + 1));
        if (!fits(seen, points[i]))
            throw DomainError(ErrorKind::GeneralPositionViolation,
                              "point " + std::to_string(i + 1) + " is collinear or cocircular with earlier points");
        seen.push_back(points[i]);
    }
}

StaticPointSet random_gp_points(std::uint64_t seed, int n, int range) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-range, range);
    StaticPointSet s;
    while (static_cast<int>(s.points.size()) < n) {
        Pt q{coord(rng), coord(rng)};
        if (fits(s.points, q)) s.points.push_back(q);
    }
    return s;
}

std::vector<CircleRecord> circles(const StaticPointSet& s) {
    s.validate();
    const auto& p = s.points;
    std::size_t n = p.size();
    std::vector<CircleRecord> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                CircleRecord c;
                c.a = static_cast<int>(i + 1);
                c.b = static_cast<int>(j + 1);
                c.c = static_cast<int>(k + 1);
                c.center = circumcenter(p[i], p[j], p[k]);
                Rational r2 = norm2(Pt{p[i].x - c.center.x, p[i].y - c.center.y});
                for (std::size_t q = 0; q < n; ++q) {
                    if (q == i || q == j || q == k) continue;
                    if (norm2(Pt{p[q].x - c.center.x, p[q].y - c.center.y}) < r2) {
                        c.inside |= LabelMask(1) << q;
                        ++c.order;
                    }
                }
                out.push_back(c);
            }
    return out;
}

Box korder_box(const StaticPointSet& s) {
    std::vector<Pt> pts = s.points;
    const auto& p = s.points;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            pts.push_back(Pt{(p[i].x + p[j].x) / 2, (p[i].y + p[j].y) / 2});
            for (std::size_t k = j + 1; k < p.size(); ++k) pts.push_back(circumcenter(p[i], p[j], p[k]));
        }
    return bounding_box(pts);
}

namespace {

std::vector<Pt> hull(std::vector<Pt> p) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() <= 2) return p;
    std::vector<Pt> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i - 1]) <= 0) --k;
        h[k++] = p[i - 1];
    }
    h.resize(k - 1);
    return h;
}

bool on_segment(const Pt& a, const Pt& b, const Pt& q) {
    return cross(a, b, q) == 0 && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool segments_meet(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int d1 = sgn(cross(c, d, a)), d2 = sgn(cross(c, d, b)), d3 = sgn(cross(a, b, c)), d4 = sgn(cross(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) || on_segment(a, b, d);
}

// Closed containment in a counterclockwise polygon with at least three vertices.
bool in_polygon(const std::vector<Pt>& h, const Pt& q) {
    for (std::size_t i = 0; i < h.size(); ++i)
        if (cross(h[i], h[(i + 1) % h.size()], q) < 0) return false;
    return true;
}

std::vector<std::pair<Pt, Pt>> hull_edges(const std::vector<Pt>& h) {
    std::vector<std::pair<Pt, Pt>> e;
    if (h.size() == 1) e.emplace_back(h[0], h[0]);
    else if (h.size() == 2) e.emplace_back(h[0], h[1]);
    else
        for (std::size_t i = 0; i < h.size(); ++i) e.emplace_back(h[i], h[(i + 1) % h.size()]);
    return e;
}

}  // namespace

bool hulls_disjoint(const std::vector<Pt>& a, const std::vector<Pt>& b) {
    if (a.empty() || b.empty()) return true;
    auto ha = hull(a), hb = hull(b);
    for (const auto& [p, q] : hull_edges(ha))
        for (const auto& [r, s] : hull_edges(hb))
            if (segments_meet(p, q, r, s)) return false;
    if (hb.size() >= 3 && in_polygon(hb, ha[0])) return false;
    if (ha.size() >= 3 && in_polygon(ha, hb[0])) return false;
    return true;
}

CellInfo cell_nonempty(LabelMask a, const StaticPointSet& s, const Box& box) {
    std::size_t n = s.size();
    LabelMask all = n == 32 ? ~LabelMask(0) : (LabelMask(1) << n) - 1;
    CellInfo info;
    info.region = box_polygon(box);
    std::vector<Pt> in, out;
    for (std::size_t i = 0; i < n; ++i) (a & (LabelMask(1) << i) ? in : out).push_back(s.points[i]);
    if (a == 0 || a == all) {
        info.nonempty = info.unbounded = info.touches_box = true;
        return info;
    }
    for (const auto& x : in)
        for (const auto& y : out) {
            info.region = clip(info.region, closer_to(x, y));
            if (info.region.empty()) return info;
        }
    info.region = simplify(info.region);
    info.nonempty = affine_dim(info.region) == 2;
    if (!info.nonempty) return info;
    for (const auto& p : info.region)
        if (box.on_boundary(p)) info.touches_box = true;
    info.unbounded = hulls_disjoint(in, out);
    return info;
}

CellInfo cell_nonempty(LabelMask a, const StaticPointSet& s) {
    s.validate();
    return cell_nonempty(a, s, korder_box(s));
}

std::size_t KDiagram::unbounded_edges() const {
    std::size_t r = 0;
    for (const auto& e : edges)
        if (e.ray) ++r;
    return r;
}

std::vector<KDiagram> all_order_diagrams(const StaticPointSet& s) {
    auto circ = circles(s);
    int n = static_cast<int>(s.size());
    std::vector<KDiagram> out(static_cast<std::size_t>(std::max(0, n - 1)));
    for (int k = 1; k < n; ++k) out[static_cast<std::size_t>(k - 1)].k = k;

    using Key = std::pair<LabelMask, LabelMask>;
    std::vector<std::map<Key, std::vector<std::pair<int, std::pair<Rational, Rational>>>>> ends(out.size());

    for (std::size_t ci = 0; ci < circ.size(); ++ci) {
        const auto& c = circ[ci];
        int tri[3] = {c.a, c.b, c.c};
        for (bool is_new : {true, false}) {
            int k = c.order + (is_new ? 1 : 2);
            if (k > n - 1) continue;
            auto& diag = out[static_cast<std::size_t>(k - 1)];
            KVertex v;
            v.circle = static_cast<int>(ci);
            v.is_new = is_new;
            v.center = c.center;
            auto bit = [](int l) { return LabelMask(1) << (l - 1); };
            for (int t = 0; t < 3; ++t) {
                int x = tri[t], y = tri[(t + 1) % 3], z = tri[(t + 2) % 3];
                // New vertex cells H+x; old vertex cells H+xy.
                v.cells[t] = is_new ? (c.inside | bit(x)) : (c.inside | bit(x) | bit(y));
                LabelMask cx = c.inside | bit(x) | (is_new ? 0 : bit(z));
                LabelMask cy = c.inside | bit(y) | (is_new ? 0 : bit(z));
                const Pt& px = s.points[static_cast<std::size_t>(x - 1)];
                const Pt& py = s.points[static_cast<std::size_t>(y - 1)];
                const Pt& pz = s.points[static_cast<std::size_t>(z - 1)];
                Rational dx = -(py.y - px.y), dy = py.x - px.x;
                Rational side = dx * (px.x - pz.x) + dy * (px.y - pz.y);
                if ((is_new && side < 0) || (!is_new && side > 0)) {
                    dx = -dx;
                    dy = -dy;
                }
                Key key{std::min(cx, cy), std::max(cx, cy)};
                ends[static_cast<std::size_t>(k - 1)][key].push_back(
                    {static_cast<int>(diag.vertices.size()), {dx, dy}});
            }
            diag.vertices.push_back(v);
        }
    }

    for (std::size_t d = 0; d < out.size(); ++d) {
        std::set<LabelMask> cells;
        for (const auto& v : out[d].vertices) cells.insert(v.cells, v.cells + 3);
        out[d].cells.assign(cells.begin(), cells.end());
        for (const auto& [key, vs] : ends[d]) {
            KEdge e;
            e.left = key.first;
            e.right = key.second;
            for (const auto& [vi, dir] : vs) e.vertices.push_back(vi);
            if (vs.size() == 1) e.ray = vs[0].second;
            out[d].edges.push_back(std::move(e));
        }
    }
    return out;
}

bool VoronoiPoset::contains(LabelMask m) const {
    return std::binary_search(elements.begin(), elements.end(), m, [](LabelMask a, LabelMask b) {
        int sa = mask_size(a), sb = mask_size(b);
        return sa != sb ? sa < sb : a < b;
    });
}

bool VoronoiPoset::graded() const {
    for (LabelMask m : elements) {
        if (m == 0) continue;
        bool covers = false;
        for (LabelMask rest = m; rest && !covers; rest &= rest - 1)
            if (contains(m & ~(rest & -rest))) covers = true;
        if (!covers) return false;
    }
    return true;
}

VoronoiPoset voronoi_poset(const StaticPointSet& s) {
    s.validate();
    int n = static_cast<int>(s.size());
    Box box = korder_box(s);
    VoronoiPoset p;
    p.n = n;
    std::vector<LabelMask> level{0};
    p.elements.push_back(0);
    p.unbounded.push_back(1);
    p.touches_box.push_back(1);
    for (int k = 1; k <= n; ++k) {
        std::set<LabelMask> cand;
        for (LabelMask a : level)
            for (int b = 0; b < n; ++b)
                if (!(a & (LabelMask(1) << b))) cand.insert(a | (LabelMask(1) << b));
        std::vector<LabelMask> cs(cand.begin(), cand.end());
        std::vector<CellInfo> info(cs.size());
        parallel_for(cs.size(), [&](std::size_t i) {
            info[i] = cell_nonempty(cs[i], s, box);
            info[i].region.clear();
        });
        level.clear();
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (!info[i].nonempty) continue;
            level.push_back(cs[i]);
            p.elements.push_back(cs[i]);
            p.unbounded.push_back(info[i].unbounded);
            p.touches_box.push_back(info[i].touches_box);
        }
    }
    return p;
}

std::vector<long> reduced_f(const std::vector<long>& f, int n) {
    std::vector<long> r;
    for (int k = 1; k <= (n + 1) / 2; ++k)
        r.push_back(f[static_cast<std::size_t>(k)] + f[static_cast<std::size_t>(n - k + 1)]);
    return r;
}

std::vector<long> reduced_c(const std::vector<long>& c, int n) {
    std::vector<long> r;
    for (int i = 0; 2 * i <= n - 3; ++i)
        r.push_back(c[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(n - i - 3)]);
    return r;
}

std::optional<ReducedRow> reduced_table(int n) {
    static const std::map<int, ReducedRow> rows = {
        {3, {{4, 6}, {2}}},
        {4, {{5, 9}, {4}}},
        {5, {{6, 12, 14}, {6, 8}}},
        {6, {{7, 15, 19}, {8, 12}}},
        {7, {{8, 18, 24, 26}, {10, 16, 18}}},
        {8, {{9, 21, 29, 33}, {12, 20, 24}}},
        {9, {{10, 24, 34, 40, 42}, {14, 24, 30, 32}}},
        {10, {{11, 27, 39, 47, 51}, {16, 28, 36, 40}}},
        {11, {{12, 30, 44, 54, 60, 62}, {18, 32, 42, 48, 50}}},
        {12, {{13, 33, 49, 61, 69, 73}, {20, 36, 48, 56, 60}}},
    };
    auto it = rows.find(n);
    if (it == rows.end()) return std::nullopt;
    return it->second;
}

CountVectors count_vectors(const StaticPointSet& s, const VoronoiPoset& p, const std::vector<CircleRecord>& circ,
                           const std::vector<KDiagram>& diagrams) {
    int n = static_cast<int>(s.size());
    auto N = static_cast<std::size_t>(n);
    CountVectors cv;
    cv.n = n;
    cv.f.assign(N + 1, 0);
    cv.v.assign(N + 1, 0);
    cv.e.assign(N + 1, 0);
    cv.f_inf.assign(N + 1, 0);
    cv.c.assign(n >= 3 ? N - 2 : 0, 0);
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        auto k = static_cast<std::size_t>(mask_size(p.elements[i]));
        ++cv.f[k];
        if (k >= 1 && k + 1 <= N && p.unbounded[i]) ++cv.f_inf[k];
    }
    for (const auto& c : circ) ++cv.c[static_cast<std::size_t>(c.order)];
    for (const auto& d : diagrams) {
        cv.v[static_cast<std::size_t>(d.k)] = static_cast<long>(d.vertices.size());
        cv.e[static_cast<std::size_t>(d.k)] = static_cast<long>(d.edges.size());
    }
    cv.f_red = reduced_f(cv.f, n);
    if (n >= 3) cv.c_red = reduced_c(cv.c, n);
    return cv;
}

long alternating_sum(const std::vector<long>& f) {
    long a = 0;
    for (std::size_t k = 0; k < f.size(); ++k) a += (k % 2 == 1 ? 1 : -1) * f[k];
    return a;
}

bool SymmetryReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string vec_str(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

SymmetryReport verify_symmetries(const StaticPointSet& s) {
    s.validate();
    int n = static_cast<int>(s.size());
    if (n < 3) throw DomainError(ErrorKind::InvalidInput, "symmetry identities need at least three points");
    auto circ = circles(s);
    auto poset = voronoi_poset(s);
    auto diagrams = all_order_diagrams(s);
    SymmetryReport rep;
    rep.counts = count_vectors(s, poset, circ, diagrams);
    const auto& cv = rep.counts;
    auto F = [&](long k) { return cv.f[static_cast<std::size_t>(k)]; };
    auto V = [&](long k) { return cv.v[static_cast<std::size_t>(k)]; };
    auto E = [&](long k) { return cv.e[static_cast<std::size_t>(k)]; };
    auto FI = [&](long k) { return cv.f_inf[static_cast<std::size_t>(k)]; };
    auto C = [&](long i) { return cv.c_at(i); };

    auto check = [&](const std::string& name, auto&& pred, long lo, long hi) {
        CheckResult r{name, true, ""};
        for (long k = lo; k <= hi; ++k)
            if (!pred(k)) {
                r.pass = false;
                r.detail += (r.detail.empty() ? "fails at " : ",") + std::to_string(k);
            }
        rep.checks.push_back(r);
    };
    auto single = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back(CheckResult{name, ok, detail});
    };
    long nn = n;

    check("f_k + f_{n-k+1} = 2k(n-k+1)+1-n", [&](long k) { return F(k) + F(nn - k + 1) == 2 * k * (nn - k + 1) + 1 - nn; },
          1, nn);
    check("v_k + v_{n-k} = 4k(n-k)-2n", [&](long k) { return V(k) + V(nn - k) == 4 * k * (nn - k) - 2 * nn; }, 1,
          nn - 1);
    check("c_i + c_{n-i-3} = 2(i+1)(n-2-i)", [&](long i) { return C(i) + C(nn - i - 3) == 2 * (i + 1) * (nn - 2 - i); },
          0, nn - 3);
    check("f_k = n-k+1+c_{k-2}", [&](long k) { return F(k) == nn - k + 1 + C(k - 2); }, 1, nn);
    check("v_k = c_{k-1}+c_{k-2}", [&](long k) { return V(k) == C(k - 1) + C(k - 2); }, 1, nn - 1);
    check("e_k = v_k+f_k-1", [&](long k) { return E(k) == V(k) + F(k) - 1; }, 1, nn - 1);
    check("v_k = 2(f_k-1)-f_k^inf", [&](long k) { return V(k) == 2 * (F(k) - 1) - FI(k); }, 1, nn - 1);
    check("e_k = 3(f_k-1)-f_k^inf", [&](long k) { return E(k) == 3 * (F(k) - 1) - FI(k); }, 1, nn - 1);
    check("f_k^inf = f_{n-k}^inf", [&](long k) { return FI(k) == FI(nn - k); }, 1, nn - 1);
    check("f_i^inf + c_{i-1} - c_{i-2} = 2(n-i)", [&](long i) { return FI(i) + C(i - 1) - C(i - 2) == 2 * (nn - i); },
          1, nn - 1);

    long sv = 0, se = 0, sf = 0, sfi = 0;
    for (long k = 1; k <= nn; ++k) {
        sv += V(k);
        se += E(k);
        sf += F(k);
        sfi += FI(k - 1);
    }
    single("sum v_k = n(n-1)(n-2)/3", sv * 3 == nn * (nn - 1) * (nn - 2), std::to_string(sv));
    single("sum e_k = n(n-1)^2/2", se * 2 == nn * (nn - 1) * (nn - 1), std::to_string(se));
    single("sum f_k = n(n^2+5)/6", sf * 6 == nn * (nn * nn + 5), std::to_string(sf));
    single("sum f_{i-1}^inf = n(n-1)", sfi == nn * (nn - 1), std::to_string(sfi));
    single("c_0 + c_{n-3} = 2n-4", C(0) + C(nn - 3) == 2 * nn - 4, std::to_string(C(0) + C(nn - 3)));

    long a = alternating_sum(cv.f);
    if (n % 2 == 1) single("odd n: alternating f-sum = 0", a == 0, "A = " + std::to_string(a));
    else
        single("even n: A odd iff n = 0 mod 4", ((a % 2 + 2) % 2 == 1) == (n % 4 == 0), "A = " + std::to_string(a));

    if (auto row = reduced_table(n)) {
        bool ok = row->f == cv.f_red && row->c == cv.c_red;
        single("reduced vectors match the table row", ok,
               "f~ = " + vec_str(cv.f_red) + ", c~ = " + vec_str(cv.c_red));
    }

    bool touch_ok = true;
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        int k = mask_size(poset.elements[i]);
        if (k >= 1 && k < n && poset.unbounded[i] != poset.touches_box[i]) touch_ok = false;
    }
    single("separating line <=> cell reaches the box", touch_ok, "");
    check("f_k^inf = unbounded edges of V_k",
          [&](long k) { return FI(k) == static_cast<long>(diagrams[static_cast<std::size_t>(k - 1)].unbounded_edges()); },
          1, nn - 1);
    if (n <= 8) {
        check("vertex-incident cells = feasible cells",
              [&](long k) {
                  std::vector<LabelMask> feas;
                  for (LabelMask m : poset.elements)
                      if (mask_size(m) == k) feas.push_back(m);
                  return feas == diagrams[static_cast<std::size_t>(k - 1)].cells;
              },
              1, nn - 1);
    }
    single("poset graded", poset.graded(), "");
    return rep;
}

std::vector<LabelMask> canonical_poset(const std::vector<LabelMask>& elements, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<LabelMask> best;
    do {
        std::vector<LabelMask> mapped;
        for (LabelMask m : elements) {
            LabelMask r = 0;
            for (int i = 0; i < n; ++i)
                if (m & (LabelMask(1) << i)) r |= LabelMask(1) << perm[static_cast<std::size_t>(i)];
            mapped.push_back(r);
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace limitvor
