#pragma once

#include "limitvor/geometry.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace limitvor {

enum class AngleMode { Directed, Undirected };

// Labels 1..n; one exact direction per pair i < j (sign-canonical when undirected).
struct AngleVector {
    AngleMode mode = AngleMode::Directed;
    int n = 0;
    std::map<std::pair<int, int>, DirectionVector> dirs;

    DirectionVector dir(int i, int j) const;
    // Undirected class of the pair.
    DirectionVector line(int i, int j) const { return dir(i, j).undirected(); }
    double radians(int i, int j) const { return dir(i, j).radians(); }
};

AngleVector angle_map(const std::vector<Pt>& c, AngleMode mode);

// p1 at the origin and p2 - p1 scaled to the primitive direction of alpha_12.
std::vector<Pt> standard_representative(const std::vector<Pt>& c);

struct Reconstruction {
    enum class Kind { Standard, CollinearOrder, NotRealizable } kind = Kind::NotRealizable;
    std::vector<Pt> points;  // Standard
    std::vector<int> order;  // CollinearOrder: labels left to right (bottom to top if vertical)
    // Undirected collinear input has no order to report.
    bool order_known = false;
};

Reconstruction reconstruct_da(const AngleVector& a);
// Up to a point reflection in p1; same construction with undirected lines.
Reconstruction reconstruct_ua(const AngleVector& a);

enum class DA3Class { Clockwise, AntiClockwise, CollinearVariant, BoundaryNonRealizable, NotRealizable };
const char* da3_name(DA3Class c);

DA3Class classify_da3(const DirectionVector& a12, const DirectionVector& a13, const DirectionVector& a23);

// Counterclockwise rotation taking w to v, as an exact vector.
std::pair<Rational, Rational> rotation_between(const DirectionVector& w, const DirectionVector& v);

// Points 0..n-1 with x_0 = 0; slopes a_ij for 0 <= i < j <= n-1, a_i = a_0i.
struct SlopeConfig {
    std::vector<Rational> x;
    std::map<std::pair<int, int>, ExtendedRational> slopes;

    int n() const { return static_cast<int>(x.size()); }
    // Finite slope or InfiniteSlopeOnChart.
    Rational a(int i, int j) const;
    void set(int i, int j, const Rational& v) { slopes[{std::min(i, j), std::max(i, j)}] = ExtendedRational(v); }
};

SlopeConfig slope_config(const std::vector<Pt>& pts);

Rational triangle_residual(const SlopeConfig& cfg, int i, int j);
Rational six_slopes(const SlopeConfig& cfg, int i, int j, int k, int l);
ExtendedRational a23_solve(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a12,
                           const Rational& a13);

bool tn_membership(const SlopeConfig& cfg);
bool t3_singular(const SlopeConfig& cfg);
bool t4_singular(const SlopeConfig& cfg);

}  // namespace limitvor
