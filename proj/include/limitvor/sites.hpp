#pragma once

#include "limitvor/exactnum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace limitvor {

struct PolySite {
    int label = 0;
    Poly x;
    Poly y;
};

struct SiteSet {
    std::vector<PolySite> sites;

    std::size_t size() const { return sites.size(); }
    const PolySite& by_label(int label) const;
    std::vector<int> labels() const;
    // Throws CoincidentSites / InvalidInput on duplicate pairs or labels.
    void validate() const;
};

// Primitive integer vector (coprime components), never (0,0).
struct DirectionVector {
    Rational dx;
    Rational dy;

    static DirectionVector primitive(const Rational& x, const Rational& y);
    double radians() const;
    DirectionVector negated() const { return DirectionVector{-dx, -dy}; }
    // Counterclockwise quarter turn.
    DirectionVector rot90() const { return DirectionVector{-dy, dx}; }
    // Sign-canonical form for undirected use: dx > 0, or dx = 0 and dy > 0.
    DirectionVector undirected() const;
    std::string str() const;

    friend bool operator==(const DirectionVector& a, const DirectionVector& b) {
        return a.dx == b.dx && a.dy == b.dy;
    }
    friend bool operator!=(const DirectionVector& a, const DirectionVector& b) { return !(a == b); }
    friend bool operator<(const DirectionVector& a, const DirectionVector& b) {
        return a.dx != b.dx ? a.dx < b.dx : a.dy < b.dy;
    }
};

struct ExtendedPoint {
    ExtendedRational cx;
    ExtendedRational cy;

    bool is_finite() const { return cx.is_finite() && cy.is_finite(); }
    bool is_origin() const { return cx == ExtendedRational(0) && cy == ExtendedRational(0); }
    std::string str() const;
    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
        return a.cx == b.cx && a.cy == b.cy;
    }
    friend bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b) { return !(a == b); }
};

enum class Orientation { Collinear, Left, Right };
enum class InCircle { Inside, Outside, Cocircular };

const char* orientation_name(Orientation o);
const char* incircle_name(InCircle c);

DirectionVector direction(const PolySite& u, const PolySite& v);

// D(t) = (vx-ux)(wy-uy) - (vy-uy)(wx-ux)
Poly collinearity_poly(const PolySite& u, const PolySite& v, const PolySite& w);
Orientation orientation(const PolySite& u, const PolySite& v, const PolySite& w);

struct CircleCenter {
    ExtendedPoint center;
    bool clockwise = false;
};

CircleCenter circle_center(const PolySite& u, const PolySite& v, const PolySite& w);
bool positive_radius(const PolySite& u, const PolySite& v, const PolySite& w);

// I(t) for the rows in the given order (no orientation normalization).
Poly incircle_poly(const PolySite& u, const PolySite& v, const PolySite& w, const PolySite& q);
InCircle in_circle(const PolySite& u, const PolySite& v, const PolySite& w, const PolySite& q);

struct GPViolation {
    enum class Kind { Collinear, Cocircular } kind;
    std::vector<int> labels;
};

std::optional<GPViolation> general_position(const SiteSet& s);
// Throws GeneralPositionViolation when general_position reports one.
void require_general_position(const SiteSet& s);

int site_order(const PolySite& u, const PolySite& v);

// Position at t = 0.
std::pair<Rational, Rational> site_at_zero(const PolySite& p);

}  // namespace limitvor
