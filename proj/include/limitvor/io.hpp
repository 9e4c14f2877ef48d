#pragma once

#include "limitvor/angles.hpp"
#include "limitvor/hooks.hpp"
#include "limitvor/hull.hpp"
#include "limitvor/korder.hpp"
#include "limitvor/limitdiag.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace limitvor {

using json = nlohmann::json;

// IoError when unreadable, ParseError when not JSON.
json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

Rational rational_from_json(const json& j);
json rational_json(const Rational& r);
json extended_json(const ExtendedRational& r);
Poly poly_from_json(const json& j);
json poly_json(const Poly& p);
Pt pt_from_json(const json& j);
json pt_json(const Pt& p);
json pt2_json(const Pt2& p);
DirectionVector direction_from_json(const json& j);
json direction_json(const DirectionVector& d);
json extended_point_json(const ExtendedPoint& p);

SiteSet siteset_from_json(const json& j);
json siteset_json(const SiteSet& s);

json type_json(const TypeSet& t);
json hull_json(const CircuitHull& cch, const CircuitHull& dh);
json skeleton_json(const Skeleton& sk);
json diagram_json(const LimitDiagram& d);
// Rays truncated at the bbox; zero-area cells dashed.
std::string diagram_svg(const LimitDiagram& d, const BBox& bb, const std::vector<Pt>& sites);
BBox parse_bbox(const std::string& s);

// { "points": [[x, y], ...] } or { "random": { "seed": s, "n": n } }.
StaticPointSet points_from_json(const json& j);
json poset_json(const VoronoiPoset& p, const CountVectors& c);

AngleVector angles_from_json(const json& j);
json angles_json(const AngleVector& a);

// { "labels": [...], "points": [[x,y],...], "dirs": {"i,j": [dx,dy]}, "velocities": [[vx,vy],...] }
// or { "random": { "seed": s, "n": n } }.
ProbeData probe_from_json(const json& j);
GammaDataSet gamma_from_json(const json& j);

// Angles in radians unless "angle_unit" is "deg".
AHPoint ah_from_json(const json& j);
json ah_json(const AHPoint& x);
Nest nest_from_json(int n, const json& clusters);
json nest_json(const Nest& z);
DomPoint dom_from_json(const json& j, bool degrees);
json dom_json(const DomPoint& d);
json tree_json(const HookedTree& t);
json fill_json(const ScreenFill& f);
json clickable_json(const ClickableScreen& c);

}  // namespace limitvor
