#pragma once

#include "limitvor/exactnum.hpp"
#include "limitvor/sites.hpp"

#include <map>
#include <vector>

namespace limitvor {

struct Pt {
    Rational x;
    Rational y;

    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
    friend bool operator<(const Pt& a, const Pt& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
    std::string str() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }
};

// a*x + b*y <= c
struct Ineq {
    Rational a;
    Rational b;
    Rational c;

    Rational eval(const Pt& p) const { return a * p.x + b * p.y - c; }
};

// { p : n.(p - base) <= 0 }
Ineq half_plane_ineq(const DirectionVector& n, const Pt& base);
// Points at least as close to x as to y.
Ineq closer_to(const Pt& x, const Pt& y);

struct Box {
    Rational x0, y0, x1, y1;

    bool on_boundary(const Pt& p) const { return p.x == x0 || p.x == x1 || p.y == y0 || p.y == y1; }
    bool strictly_inside(const Pt& p) const { return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1; }
    // Both points lie on one common side.
    bool same_side(const Pt& p, const Pt& q) const;
};

// Box containing the given points strictly inside, with margin.
Box bounding_box(const std::vector<Pt>& pts);

// Convex polygon, counterclockwise; may degenerate to a segment (2 vertices)
// or a point (1 vertex).
using Polygon = std::vector<Pt>;

Polygon box_polygon(const Box& b);
Polygon clip(const Polygon& poly, const Ineq& h);
// Drops repeated and collinear vertices; segments reduce to their two extremes.
Polygon simplify(const Polygon& poly);
// -1 empty, 0 point, 1 segment, 2 region.
int affine_dim(const Polygon& poly);

// Intersection of two lines a1 x + b1 y = c1, a2 x + b2 y = c2; false if parallel.
bool line_intersection(const Ineq& l1, const Ineq& l2, Pt& out);

// Canonical line a x + b y = c with a = 1, or a = 0 and b = 1.
struct LineKey {
    Rational a, b, c;

    bool vertical() const { return b == 0; }
    // Parameter along the line: x, or y for vertical lines.
    Rational param(const Pt& p) const { return vertical() ? p.y : p.x; }
    Pt at(const Rational& s) const;
    friend bool operator==(const LineKey& l, const LineKey& r) { return l.a == r.a && l.b == r.b && l.c == r.c; }
    friend bool operator<(const LineKey& l, const LineKey& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

LineKey line_through(const Pt& p, const Pt& q);
LineKey line_from_ineq(const Ineq& h);

struct Interval {
    ExtendedRational lo;
    ExtendedRational hi;

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Union of closed intervals on canonical lines plus isolated points.
struct Skeleton {
    std::map<LineKey, std::vector<Interval>> lines;
    std::vector<Pt> points;

    void add_interval(const LineKey& l, Interval iv);
    // Segment between two points; ends on the box boundary become infinite.
    void add_segment(const Pt& p, const Pt& q, const Box& box);
    void add_point(const Pt& p);
    // Merge overlapping intervals, drop covered points, sort everything.
    void normalize();
    bool covers(const Pt& p) const;
    bool empty() const { return lines.empty() && points.empty(); }
    std::size_t element_count() const;

    friend bool operator==(const Skeleton& a, const Skeleton& b) { return a.lines == b.lines && a.points == b.points; }
    friend bool operator!=(const Skeleton& a, const Skeleton& b) { return !(a == b); }
};

}  // namespace limitvor
