#pragma once

#include "limitvor/sites.hpp"

#include <vector>

namespace limitvor {

// Clockwise cyclic label sequence; edge_directions[i] is the direction from
// labels[i] to labels[(i+1) % size].
struct CircuitHull {
    std::vector<int> labels;
    std::vector<DirectionVector> edge_directions;
};

bool right_turn(const PolySite& u, const PolySite& v, const PolySite& w);
CircuitHull combinatorial_convex_hull(const SiteSet& s);
CircuitHull direction_hull(const SiteSet& s);

bool is_zero_cluster(const SiteSet& s);

// Rotate a cyclic label list so that it starts at its smallest label.
std::vector<int> canonical_cycle(const std::vector<int>& cyc);

}  // namespace limitvor
