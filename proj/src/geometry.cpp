#include "limitvor/geometry.hpp"

#include "limitvor/errors.hpp"

#include <algorithm>

namespace limitvor {

Ineq half_plane_ineq(const DirectionVector& n, const Pt& base) {
    return Ineq{n.dx, n.dy, n.dx * base.x + n.dy * base.y};
}

Ineq closer_to(const Pt& x, const Pt& y) {
    // (y - x).(p - (x+y)/2) <= 0
    Rational a = y.x - x.x, b = y.y - x.y;
    Rational c = (a * (x.x + y.x) + b * (x.y + y.y)) / 2;
    return Ineq{a, b, c};
}

bool Box::same_side(const Pt& p, const Pt& q) const {
    return (p.x == x0 && q.x == x0) || (p.x == x1 && q.x == x1) || (p.y == y0 && q.y == y0) ||
           (p.y == y1 && q.y == y1);
}

Box bounding_box(const std::vector<Pt>& pts) {
    if (pts.empty()) return Box{-1, -1, 1, 1};
    Rational x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
    for (const auto& p : pts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    Rational m = std::max(Rational(1), std::max(Rational(x1 - x0), Rational(y1 - y0)));
    return Box{x0 - m, y0 - m, x1 + m, y1 + m};
}

Polygon box_polygon(const Box& b) { return {{b.x0, b.y0}, {b.x1, b.y0}, {b.x1, b.y1}, {b.x0, b.y1}}; }

namespace {

void push_unique(Polygon& out, const Pt& p) {
    if (out.empty() || out.back() != p) out.push_back(p);
}

Rational cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Polygon clip(const Polygon& poly, const Ineq& h) {
    if (poly.empty()) return {};
    if (poly.size() == 1) return sgn(h.eval(poly[0])) <= 0 ? poly : Polygon{};
    std::vector<Rational> v;
    v.reserve(poly.size());
    bool all_in = true, all_out = true;
    for (const auto& p : poly) {
        v.push_back(h.eval(p));
        if (sgn(v.back()) > 0) all_in = false;
        else all_out = false;
    }
    if (all_in) return poly;
    if (all_out) return {};
    Polygon out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        int si = sgn(v[i]), sj = sgn(v[j]);
        if (si <= 0) push_unique(out, poly[i]);
        if ((si < 0 && sj > 0) || (si > 0 && sj < 0)) {
            Rational s = v[i] / (v[i] - v[j]);
            push_unique(out, Pt{poly[i].x + s * (poly[j].x - poly[i].x), poly[i].y + s * (poly[j].y - poly[i].y)});
        }
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

Polygon simplify(const Polygon& poly) {
    Polygon p;
    for (const auto& q : poly) push_unique(p, q);
    while (p.size() > 1 && p.front() == p.back()) p.pop_back();
    if (p.size() <= 2) return p;
    bool all_collinear = true;
    for (std::size_t i = 2; i < p.size() && all_collinear; ++i)
        if (cross(p[0], p[1], p[i]) != 0) all_collinear = false;
    if (all_collinear) {
        auto mm = std::minmax_element(p.begin(), p.end());
        return {*mm.first, *mm.second};
    }
    bool changed = true;
    while (changed && p.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Pt& a = p[(i + p.size() - 1) % p.size()];
            const Pt& c = p[(i + 1) % p.size()];
            if (cross(a, p[i], c) == 0) {
                p.erase(p.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return p;
}

int affine_dim(const Polygon& poly) {
    Polygon p = simplify(poly);
    if (p.empty()) return -1;
    if (p.size() == 1) return 0;
    if (p.size() == 2) return 1;
    return 2;
}

bool line_intersection(const Ineq& l1, const Ineq& l2, Pt& out) {
    Rational det = l1.a * l2.b - l1.b * l2.a;
    if (det == 0) return false;
    out.x = (l1.c * l2.b - l1.b * l2.c) / det;
    out.y = (l1.a * l2.c - l1.c * l2.a) / det;
    return true;
}

Pt LineKey::at(const Rational& s) const {
    if (vertical()) return Pt{c, s};
    return Pt{s, (c - a * s) / b};
}

namespace {

LineKey normalize_line(Rational a, Rational b, Rational c) {
    if (a != 0) {
        b /= a;
        c /= a;
        a = 1;
    } else {
        if (b == 0) throw DomainError(ErrorKind::InvalidInput, "degenerate line");
        c /= b;
        b = 1;
    }
    return LineKey{a, b, c};
}

}  // namespace

LineKey line_through(const Pt& p, const Pt& q) {
    Rational a = q.y - p.y, b = p.x - q.x;
    return normalize_line(a, b, a * p.x + b * p.y);
}

LineKey line_from_ineq(const Ineq& h) { return normalize_line(h.a, h.b, h.c); }

void Skeleton::add_interval(const LineKey& l, Interval iv) { lines[l].push_back(std::move(iv)); }

void Skeleton::add_segment(const Pt& p, const Pt& q, const Box& box) {
    if (p == q) {
        add_point(p);
        return;
    }
    LineKey l = line_through(p, q);
    Pt a = p, b = q;
    if (l.param(b) < l.param(a)) std::swap(a, b);
    Interval iv;
    iv.lo = box.on_boundary(a) ? ExtendedRational::neg_inf() : ExtendedRational(l.param(a));
    iv.hi = box.on_boundary(b) ? ExtendedRational::pos_inf() : ExtendedRational(l.param(b));
    add_interval(l, iv);
}

void Skeleton::add_point(const Pt& p) { points.push_back(p); }

void Skeleton::normalize() {
    for (auto& [l, ivs] : lines) {
        std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
            if (a.lo != b.lo) return a.lo < b.lo;
            return a.hi < b.hi;
        });
        std::vector<Interval> merged;
        for (const auto& iv : ivs) {
            if (!merged.empty() && !(merged.back().hi < iv.lo)) {
                if (merged.back().hi < iv.hi) merged.back().hi = iv.hi;
            } else {
                merged.push_back(iv);
            }
        }
        ivs = std::move(merged);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Pt> kept;
    for (const auto& p : points)
        if (!covers(p)) kept.push_back(p);
    points = std::move(kept);
}

bool Skeleton::covers(const Pt& p) const {
    for (const auto& [l, ivs] : lines) {
        if (l.a * p.x + l.b * p.y != l.c) continue;
        ExtendedRational s(l.param(p));
        for (const auto& iv : ivs)
            if (!(s < iv.lo) && !(iv.hi < s)) return true;
    }
    return false;
}

std::size_t Skeleton::element_count() const {
    std::size_t n = points.size();
    for (const auto& [l, ivs] : lines) n += ivs.size();
    return n;
}

}  // namespace limitvor
