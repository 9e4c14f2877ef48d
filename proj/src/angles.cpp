#include "limitvor/angles.hpp"

#include "limitvor/errors.hpp"

#include <algorithm>
#include <numeric>

namespace limitvor {

DirectionVector AngleVector::dir(int i, int j) const {
    auto it = dirs.find({std::min(i, j), std::max(i, j)});
    if (it == dirs.end())
        throw DomainError(ErrorKind::InvalidInput, "no angle for pair " + std::to_string(i) + "," + std::to_string(j));
    if (mode == AngleMode::Undirected || i < j) return it->second;
    return it->second.negated();
}

AngleVector angle_map(const std::vector<Pt>& c, AngleMode mode) {
    AngleVector a;
    a.mode = mode;
    a.n = static_cast<int>(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            if (c[i] == c[j])
                throw DomainError(ErrorKind::CoincidentPoints,
                                  "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
            auto d = DirectionVector::primitive(c[j].x - c[i].x, c[j].y - c[i].y);
            a.dirs[{static_cast<int>(i + 1), static_cast<int>(j + 1)}] =
                mode == AngleMode::Undirected ? d.undirected() : d;
        }
    return a;
}

std::vector<Pt> standard_representative(const std::vector<Pt>& c) {
    if (c.size() < 2) throw DomainError(ErrorKind::InvalidInput, "need at least two points");
    Rational dx = c[1].x - c[0].x, dy = c[1].y - c[0].y;
    auto d = DirectionVector::primitive(dx, dy);
    Rational k = dx != 0 ? Rational(d.dx / dx) : Rational(d.dy / dy);
    std::vector<Pt> r;
    for (const auto& p : c) r.push_back(Pt{(p.x - c[0].x) * k, (p.y - c[0].y) * k});
    return r;
}

namespace {

Ineq line_ineq(const Pt& p, const DirectionVector& d) {
    // -dy x + dx y = -dy px + dx py
    return Ineq{-d.dy, d.dx, -d.dy * p.x + d.dx * p.y};
}

bool positive_along(const Pt& from, const Pt& to, const DirectionVector& d) {
    Rational vx = to.x - from.x, vy = to.y - from.y;
    return vx * d.dy - vy * d.dx == 0 && vx * d.dx + vy * d.dy > 0;
}

Reconstruction build(const AngleVector& a, bool directed) {
    Reconstruction r;
    int n = a.n;
    if (n < 2) return r;
    auto line = [&](int i, int j) { return a.dir(i, j).undirected(); };

    bool collinear = true;
    for (const auto& [k, d] : a.dirs)
        if (d.undirected() != line(1, 2)) collinear = false;
    if (collinear && n >= 3) {
        if (!directed) {
            r.kind = Reconstruction::Kind::CollinearOrder;
            return r;
        }
        DirectionVector u = line(1, 2);
        // Position of a label = number of labels before it on the line.
        std::vector<int> order(static_cast<std::size_t>(n), 0);
        for (int i = 1; i <= n; ++i) {
            int before = 0;
            for (int j = 1; j <= n; ++j)
                if (j != i && a.dir(j, i) == u) ++before;
            if (order[static_cast<std::size_t>(before)] != 0) return r;
            order[static_cast<std::size_t>(before)] = i;
        }
        for (std::size_t x = 0; x < order.size(); ++x)
            for (std::size_t y = x + 1; y < order.size(); ++y)
                if (a.dir(order[x], order[y]) != u) return r;
        r.kind = Reconstruction::Kind::CollinearOrder;
        r.order = order;
        r.order_known = true;
        return r;
    }

    std::vector<std::optional<Pt>> p(static_cast<std::size_t>(n + 1));
    DirectionVector d12 = a.dir(1, 2);
    p[1] = Pt{0, 0};
    p[2] = Pt{d12.dx, d12.dy};

    auto on_line = [&](int u, int v, int j) { return line(u, v) == line(u, j) && line(u, v) == line(v, j); };
    auto place = [&](int u, int v, int j) -> bool {
        Pt q;
        if (!line_intersection(line_ineq(*p[u], a.dir(u, j)), line_ineq(*p[v], a.dir(v, j)), q)) return false;
        if (directed && (!positive_along(*p[u], q, a.dir(u, j)) || !positive_along(*p[v], q, a.dir(v, j))))
            return false;
        p[j] = q;
        return true;
    };

    int third = 0;
    for (int i = 3; i <= n && !third; ++i)
        if (!on_line(1, 2, i)) third = i;
    if (n >= 3) {
        if (!third || !place(1, 2, third)) return r;
        for (int j = 3; j <= n; ++j) {
            if (j == third) continue;
            std::pair<int, int> anchors[3] = {{1, 2}, {1, third}, {2, third}};
            bool ok = false;
            for (auto [u, v] : anchors)
                if (!on_line(u, v, j)) {
                    ok = place(u, v, j);
                    break;
                }
            if (!ok) return r;
        }
    }

    std::vector<Pt> pts;
    for (int i = 1; i <= n; ++i) pts.push_back(*p[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return r;
    AngleVector back = angle_map(pts, a.mode);
    if (back.dirs != a.dirs) return r;
    r.kind = Reconstruction::Kind::Standard;
    r.points = pts;
    return r;
}

}  // namespace

Reconstruction reconstruct_da(const AngleVector& a) {
    if (a.mode != AngleMode::Directed) throw DomainError(ErrorKind::InvalidInput, "directed angles expected");
    return build(a, true);
}

Reconstruction reconstruct_ua(const AngleVector& a) {
    AngleVector u = a;
    u.mode = AngleMode::Undirected;
    for (auto& [k, d] : u.dirs) d = d.undirected();
    return build(u, false);
}

const char* da3_name(DA3Class c) {
    switch (c) {
    case DA3Class::Clockwise: return "Clockwise";
    case DA3Class::AntiClockwise: return "AntiClockwise";
    case DA3Class::CollinearVariant: return "CollinearVariant";
    case DA3Class::BoundaryNonRealizable: return "BoundaryNonRealizable";
    case DA3Class::NotRealizable: return "NotRealizable";
    }
    return "?";
}

std::pair<Rational, Rational> rotation_between(const DirectionVector& w, const DirectionVector& v) {
    return {w.dx * v.dx + w.dy * v.dy, w.dx * v.dy - w.dy * v.dx};
}

namespace {

using Vec = std::pair<Rational, Rational>;

// Angle in [0, 2pi): upper half first, then by cross product.
bool angle_less(const Vec& a, const Vec& b) {
    auto half = [](const Vec& v) { return v.second > 0 || (v.second == 0 && v.first > 0) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a.first * b.second - a.second * b.first > 0;
}

bool is_zero_angle(const Vec& v) { return v.second == 0 && v.first > 0; }
bool below_pi(const Vec& v) { return v.second > 0; }

// 0 < x < y < pi for rotations x, y.
bool chain(const Vec& x, const Vec& y) { return !is_zero_angle(x) && angle_less(x, y) && below_pi(y); }

}  // namespace

DA3Class classify_da3(const DirectionVector& a12, const DirectionVector& a13, const DirectionVector& a23) {
    DirectionVector a21 = a12.negated(), a32 = a23.negated();
    if (chain(rotation_between(a23, a13), rotation_between(a21, a13))) return DA3Class::Clockwise;
    if (chain(rotation_between(a23, a21), rotation_between(a13, a21))) return DA3Class::AntiClockwise;
    if ((a12 == a13 && a13 == a23) || (a12 == a13 && a13 == a32) || (a21 == a13 && a13 == a23))
        return DA3Class::CollinearVariant;
    if (a12 == a13 || a13 == a23 || a23 == a21) return DA3Class::BoundaryNonRealizable;
    return DA3Class::NotRealizable;
}

Rational SlopeConfig::a(int i, int j) const {
    auto it = slopes.find({std::min(i, j), std::max(i, j)});
    if (it == slopes.end())
        throw DomainError(ErrorKind::InvalidInput, "no slope for " + std::to_string(i) + "," + std::to_string(j));
    if (!it->second.is_finite())
        throw DomainError(ErrorKind::InfiniteSlopeOnChart,
                          "slope " + std::to_string(i) + "," + std::to_string(j) + " is vertical");
    return it->second.value();
}

SlopeConfig slope_config(const std::vector<Pt>& pts) {
    SlopeConfig cfg;
    for (const auto& p : pts) cfg.x.push_back(p.x - pts[0].x);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j])
                throw DomainError(ErrorKind::CoincidentPoints, "points " + std::to_string(i) + "," + std::to_string(j));
            Rational dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
            cfg.slopes[{static_cast<int>(i), static_cast<int>(j)}] =
                dx == 0 ? ExtendedRational::infinity(sign(dy)) : ExtendedRational(Rational(dy / dx));
        }
    return cfg;
}

Rational triangle_residual(const SlopeConfig& cfg, int i, int j) {
    const auto& x = cfg.x;
    Rational xi = x[static_cast<std::size_t>(i)], xj = x[static_cast<std::size_t>(j)];
    Rational aij = cfg.a(i, j);
    return cfg.a(0, i) * xi - cfg.a(0, j) * xj - aij * xi + aij * xj;
}

Rational six_slopes(const SlopeConfig& cfg, int i, int j, int k, int l) {
    Rational a1 = cfg.a(i, j), a2 = cfg.a(i, k), a3 = cfg.a(i, l);
    Rational a12 = cfg.a(j, k), a13 = cfg.a(j, l), a23 = cfg.a(k, l);
    return (a1 - a12) * (a2 - a23) * (a3 - a13) - (a1 - a13) * (a2 - a12) * (a3 - a23);
}

ExtendedRational a23_solve(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a12,
                           const Rational& a13) {
    Rational den = (a1 - a13) * (a2 - a12) - (a1 - a12) * (a3 - a13);
    if (den == 0) throw DomainError(ErrorKind::DegenerateDenominator, "three of the points are collinear");
    Rational num = a3 * (a1 - a13) * (a2 - a12) - a2 * (a1 - a12) * (a3 - a13);
    return ExtendedRational(Rational(num / den));
}

bool tn_membership(const SlopeConfig& cfg) {
    int n = cfg.n();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (triangle_residual(cfg, i, j) != 0) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (six_slopes(cfg, i, j, k, l) != 0) return false;
    return true;
}

namespace {

bool triple_collapsed(const SlopeConfig& cfg, int i, int j, int k) {
    const auto& x = cfg.x;
    auto X = [&](int t) { return x[static_cast<std::size_t>(t)]; };
    return X(i) == X(j) && X(j) == X(k) && cfg.a(i, j) == cfg.a(i, k) && cfg.a(i, k) == cfg.a(j, k);
}

}  // namespace

bool t3_singular(const SlopeConfig& cfg) {
    if (cfg.n() != 3) throw DomainError(ErrorKind::InvalidInput, "T3 needs three points");
    return triple_collapsed(cfg, 0, 1, 2);
}

bool t4_singular(const SlopeConfig& cfg) {
    if (cfg.n() != 4) throw DomainError(ErrorKind::InvalidInput, "T4 needs four points");
    for (int skip = 0; skip < 4; ++skip) {
        int t[3], m = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) t[m++] = i;
        if (triple_collapsed(cfg, t[0], t[1], t[2])) return true;
    }
    return false;
}

}  // namespace limitvor
