#include "limitvor/hull.hpp"

#include "limitvor/errors.hpp"

#include <algorithm>

namespace limitvor {

bool right_turn(const PolySite& u, const PolySite& v, const PolySite& w) {
    return orientation(u, v, w) == Orientation::Right;
}

bool is_zero_cluster(const SiteSet& s) {
    for (const auto& p : s.sites)
        if (p.x.constant() != 0 || p.y.constant() != 0) return false;
    return true;
}

std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
    if (cyc.empty()) return cyc;
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::vector<int> r(it, cyc.end());
    r.insert(r.end(), cyc.begin(), it);
    return r;
}

namespace {

CircuitHull with_directions(const SiteSet& s, std::vector<int> labels) {
    CircuitHull h;
    h.labels = std::move(labels);
    for (std::size_t i = 0; i < h.labels.size(); ++i)
        h.edge_directions.push_back(
            direction(s.by_label(h.labels[i]), s.by_label(h.labels[(i + 1) % h.labels.size()])));
    return h;
}

}  // namespace

CircuitHull combinatorial_convex_hull(const SiteSet& s) {
    require_general_position(s);
    if (s.size() < 2) throw DomainError(ErrorKind::InvalidInput, "hull needs at least two sites");
    std::vector<const PolySite*> p;
    for (const auto& x : s.sites) p.push_back(&x);
    std::sort(p.begin(), p.end(), [](const PolySite* a, const PolySite* b) { return site_order(*a, *b) < 0; });

    auto sweep = [](const std::vector<const PolySite*>& seq) {
        std::vector<const PolySite*> l{seq[0], seq[1]};
        for (std::size_t i = 2; i < seq.size(); ++i) {
            l.push_back(seq[i]);
            while (l.size() > 2 && !right_turn(*l[l.size() - 3], *l[l.size() - 2], *l[l.size() - 1]))
                l.erase(l.end() - 2);
        }
        return l;
    };
    auto upper = sweep(p);
    std::vector<const PolySite*> rev(p.rbegin(), p.rend());
    auto lower = sweep(rev);

    std::vector<int> labels;
    for (auto* q : upper) labels.push_back(q->label);
    for (std::size_t i = 1; i + 1 < lower.size(); ++i) labels.push_back(lower[i]->label);
    return with_directions(s, labels);
}

CircuitHull direction_hull(const SiteSet& s) {
    if (!is_zero_cluster(s)) throw DomainError(ErrorKind::NotZeroCluster, "direction hull needs a zero cluster");
    CircuitHull c = combinatorial_convex_hull(s);
    std::size_t m = c.labels.size();
    if (m <= 2) return c;
    std::vector<int> corners;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& in = c.edge_directions[(i + m - 1) % m];
        const auto& out = c.edge_directions[i];
        if (in != out) corners.push_back(c.labels[i]);
    }
    return with_directions(s, corners);
}

}  // namespace limitvor
