#include "limitvor/hooks.hpp"

#include "limitvor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace limitvor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LabelMask bit(int label) { return LabelMask{1} << (label - 1); }

int min_label(LabelMask m) { return __builtin_ctz(m) + 1; }

Pt2 sub(const Pt2& a, const Pt2& b) { return {a.x - b.x, a.y - b.y}; }
Pt2 add(const Pt2& a, const Pt2& b) { return {a.x + b.x, a.y + b.y}; }
double dot(const Pt2& a, const Pt2& b) { return a.x * b.x + a.y * b.y; }
Pt2 rot(const Pt2& v, double a) {
    double c = std::cos(a), s = std::sin(a);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}
double arg(const Pt2& v) { return std::atan2(v.y, v.x); }

double beta_diff(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b) ? 0.0 : kInf;
    return std::abs(a - b);
}

std::string hook_name(int i, int j, int k) {
    bool wide = i >= 10 || j >= 10 || k >= 10;
    std::ostringstream os;
    if (wide)
        os << "h^{" << i << "," << k << "}_{" << i << "," << j << "}";
    else
        os << "h^{" << i << k << "}_{" << i << j << "}";
    return os.str();
}

std::string cluster_str(LabelMask m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int l : mask_labels(m)) {
        os << (first ? "" : ",") << l;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

double wrap_angle(double a) {
    double r = std::remainder(a, 2 * kPi);
    if (r <= -kPi) r += 2 * kPi;
    return r;
}

double wrap_half(double a) {
    double r = std::remainder(a, kPi);
    if (r >= kPi / 2) r -= kPi;
    if (r < -kPi / 2) r += kPi;
    return r;
}

double angle_dist(double a, double b) { return std::abs(wrap_angle(a - b)); }
double angle_dist_pi(double a, double b) { return std::abs(wrap_half(a - b)); }
double deg(double r) { return r * 180.0 / kPi; }
double rad(double d) { return d * kPi / 180.0; }

Hook klein_swap(const Hook& h) { return Hook{-h.beta, wrap_angle(h.alpha + kPi)}; }

Hook reciprocal(const Hook& h) {
    double b;
    if (h.beta == 0)
        b = kInf;
    else if (std::isinf(h.beta))
        b = 0;
    else
        b = 1.0 / h.beta;
    return Hook{b, wrap_angle(-h.alpha)};
}

double hook_dist(const Hook& a, const Hook& b) { return std::max(beta_diff(a.beta, b.beta), angle_dist(a.alpha, b.alpha)); }

double hook_dist_klein(const Hook& a, const Hook& b) { return std::min(hook_dist(a, b), hook_dist(a, klein_swap(b))); }

Hook hook_of(const Pt2& pi, const Pt2& pj, const Pt2& pk) {
    if (pi == pj || pi == pk) throw DomainError(ErrorKind::CoincidentWithHinge, "hinge coincides with an end point");
    Pt2 u = sub(pj, pi), v = sub(pk, pi);
    return Hook{std::hypot(v.x, v.y) / std::hypot(u.x, u.y), wrap_angle(arg(v) - arg(u))};
}

const char* ah_mode_name(AHMode m) { return m == AHMode::XAH ? "XAH" : "FM2"; }

void AHPoint::set_angle(int i, int j, double a) {
    if (i < j)
        angles[{i, j}] = wrap_angle(a);
    else
        angles[{j, i}] = wrap_angle(a + kPi);
}

std::optional<double> AHPoint::angle(int i, int j) const {
    auto it = angles.find({std::min(i, j), std::max(i, j)});
    if (it == angles.end()) return std::nullopt;
    return i < j ? it->second : wrap_angle(it->second + kPi);
}

double AHPoint::angle_at(int i, int j) const {
    auto a = angle(i, j);
    if (!a) throw DomainError(ErrorKind::InvalidInput, "missing angle " + std::to_string(i) + "," + std::to_string(j));
    return *a;
}

std::optional<Hook> AHPoint::hook(int i, int j, int k) const {
    auto it = hooks.find({i, j, k});
    if (it != hooks.end()) return it->second;
    it = hooks.find({i, k, j});
    if (it != hooks.end()) return reciprocal(it->second);
    return std::nullopt;
}

Hook AHPoint::hook_at(int i, int j, int k) const {
    auto h = hook(i, j, k);
    if (!h) throw DomainError(ErrorKind::InvalidInput, "missing hook " + hook_name(i, j, k));
    return *h;
}

AHPoint ah_of_configuration(const std::vector<Pt2>& pts) {
    AHPoint x;
    x.mode = AHMode::FM2;
    x.n = static_cast<int>(pts.size());
    for (int i = 1; i <= x.n; ++i)
        for (int j = i + 1; j <= x.n; ++j) {
            Pt2 d = sub(pts[static_cast<std::size_t>(j - 1)], pts[static_cast<std::size_t>(i - 1)]);
            if (d.x == 0 && d.y == 0) throw DomainError(ErrorKind::CoincidentPoints, "configuration has coincident points");
            x.set_angle(i, j, arg(d));
        }
    for (int i = 1; i <= x.n; ++i)
        for (int j = 1; j <= x.n; ++j)
            for (int k = 1; k <= x.n; ++k)
                if (i != j && j != k && i != k)
                    x.set_hook(i, j, k,
                               hook_of(pts[static_cast<std::size_t>(i - 1)], pts[static_cast<std::size_t>(j - 1)],
                                       pts[static_cast<std::size_t>(k - 1)]));
    return x;
}

std::vector<std::string> ratio_law_violations(const AHPoint& x, double tol) {
    std::vector<std::string> out;
    auto b = [&](int i, int j, int k) -> std::optional<double> {
        auto h = x.hook(i, j, k);
        if (!h) return std::nullopt;
        return std::abs(h->beta);
    };
    auto report = [&](const std::string& s) {
        if (out.size() < 20) out.push_back(s);
    };
    int n = x.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                auto bik = b(i, j, k), bij = b(i, k, j), bjk = b(j, i, k);
                if (!bik || !bij) continue;
                // Stored hooks only; the reciprocal fallback is exact by construction.
                if (x.hooks.count({i, j, k}) && x.hooks.count({i, k, j})) {
                    double p = *bik, r = *bij;
                    bool ok = (p == 0 && std::isinf(r)) || (std::isinf(p) && r == 0) ||
                              (std::isfinite(p) && std::isfinite(r) && std::abs(p * r - 1) <= tol * std::max(1.0, p * r));
                    if (!ok) report("reciprocal " + hook_name(i, j, k));
                }
                if (bjk && *bik + *bjk < 1 - tol) report("triangle " + hook_name(i, j, k));
                for (int l = 1; l <= n; ++l) {
                    if (l == i || l == j || l == k) continue;
                    auto bil_j = b(i, l, j), bil_k = b(i, l, k);
                    if (!bil_j || !bil_k) continue;
                    if (std::isinf(*bil_j) || std::isinf(*bik)) continue;
                    double lhs = *bil_j * *bik;
                    if (std::isinf(*bil_k) || std::abs(lhs - *bil_k) > tol * std::max(1.0, *bil_k))
                        report("product " + hook_name(i, l, j) + "*" + hook_name(i, j, k));
                }
            }
    return out;
}

Nest Nest::make(int n, std::vector<LabelMask> nontrivial) {
    if (n < 1 || n > 31) throw DomainError(ErrorKind::InvalidInput, "nest size out of range");
    Nest z;
    z.n = n;
    LabelMask top = n == 32 ? ~LabelMask{0} : (LabelMask{1} << n) - 1;
    z.clusters = std::move(nontrivial);
    z.clusters.push_back(top);
    for (int i = 1; i <= n; ++i) z.clusters.push_back(bit(i));
    for (LabelMask c : z.clusters)
        if (c == 0 || (c & ~top) != 0) throw DomainError(ErrorKind::InvalidInput, "cluster outside the label range");
    std::sort(z.clusters.begin(), z.clusters.end(), [](LabelMask a, LabelMask b) {
        int sa = mask_size(a), sb = mask_size(b);
        return sa != sb ? sa < sb : a < b;
    });
    z.clusters.erase(std::unique(z.clusters.begin(), z.clusters.end()), z.clusters.end());
    for (std::size_t a = 0; a < z.clusters.size(); ++a)
        for (std::size_t b = a + 1; b < z.clusters.size(); ++b) {
            LabelMask u = z.clusters[a], v = z.clusters[b];
            LabelMask w = u & v;
            if (w != 0 && w != u && w != v)
                throw DomainError(ErrorKind::NotNested, cluster_str(u) + " and " + cluster_str(v) + " overlap");
        }
    return z;
}

Nest Nest::trivial(int n) { return make(n, {}); }

LabelMask Nest::top() const { return clusters.back(); }

bool Nest::contains(LabelMask c) const { return std::find(clusters.begin(), clusters.end(), c) != clusters.end(); }

LabelMask Nest::smallest_containing(LabelMask m) const {
    for (LabelMask c : clusters)
        if ((c & m) == m) return c;
    throw DomainError(ErrorKind::InvalidInput, "labels outside the nest");
}

std::vector<LabelMask> Nest::maximal_subclusters(LabelMask c) const {
    std::vector<LabelMask> out;
    for (LabelMask d : clusters) {
        if (d == c || (d & c) != d) continue;
        bool maximal = true;
        for (LabelMask e : clusters)
            if (e != c && e != d && (e & c) == e && (d & e) == d) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(d);
    }
    std::sort(out.begin(), out.end(), [](LabelMask a, LabelMask b) { return min_label(a) < min_label(b); });
    return out;
}

std::optional<LabelMask> Nest::parent(LabelMask c) const {
    for (LabelMask d : clusters)
        if (d != c && (d & c) == c) return d;
    return std::nullopt;
}

int Nest::depth(LabelMask c) const {
    int d = 1;
    for (LabelMask e : clusters)
        if (e != c && (e & c) == c) ++d;
    return d;
}

std::vector<LabelMask> Nest::nontrivial() const {
    std::vector<LabelMask> out;
    for (LabelMask c : clusters)
        if (mask_size(c) >= 2) out.push_back(c);
    std::sort(out.begin(), out.end(), [&](LabelMask a, LabelMask b) {
        int da = depth(a), db = depth(b);
        return da != db ? da < db : min_label(a) < min_label(b);
    });
    return out;
}

std::string Nest::str() const {
    std::vector<LabelMask> shown;
    for (LabelMask c : clusters)
        if (mask_size(c) >= 2 && c != top()) shown.push_back(c);
    std::sort(shown.begin(), shown.end(), [](LabelMask a, LabelMask b) {
        int la = min_label(a), lb = min_label(b);
        return la != lb ? la < lb : mask_size(a) > mask_size(b);
    });
    std::string s = "<";
    for (std::size_t i = 0; i < shown.size(); ++i) s += (i ? "," : "") + cluster_str(shown[i]);
    return s + ">";
}

Nest nest_of(const AHPoint& x, double zero_tol) {
    std::vector<LabelMask> cs;
    for (int i = 1; i <= x.n; ++i)
        for (int j = i + 1; j <= x.n; ++j) {
            LabelMask c = bit(i) | bit(j);
            for (int k = 1; k <= x.n; ++k) {
                if (k == i || k == j) continue;
                // beta^{ij}_{ik}
                double b = std::abs(x.hook_at(i, k, j).beta);
                if (b > zero_tol) c |= bit(k);
            }
            cs.push_back(c);
        }
    return Nest::make(x.n, cs);
}

Nest random_nest(std::mt19937_64& rng, int n, int extra) {
    if (extra < 0 || n < extra + 2) throw DomainError(ErrorKind::InvalidInput, "too many clusters for n");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<LabelMask> cs;
        Nest z = Nest::make(n, cs);
        bool stuck = false;
        while (static_cast<int>(cs.size()) < extra) {
            std::vector<LabelMask> splittable;
            for (LabelMask c : z.nontrivial())
                if (z.maximal_subclusters(c).size() >= 3) splittable.push_back(c);
            if (splittable.empty()) {
                stuck = true;
                break;
            }
            LabelMask c = splittable[std::uniform_int_distribution<std::size_t>(0, splittable.size() - 1)(rng)];
            auto subs = z.maximal_subclusters(c);
            std::shuffle(subs.begin(), subs.end(), rng);
            std::size_t s = std::uniform_int_distribution<std::size_t>(2, subs.size() - 1)(rng);
            LabelMask u = 0;
            for (std::size_t i = 0; i < s; ++i) u |= subs[i];
            cs.push_back(u);
            z = Nest::make(n, cs);
        }
        if (!stuck) return z;
    }
    throw DomainError(ErrorKind::InvalidInput, "could not generate nest");
}

const char* tag_type_name(TagType t) {
    switch (t) {
    case TagType::Top: return "top";
    case TagType::Angle2a: return "2.a";
    case TagType::Hook2b: return "2.b";
    case TagType::Hook2c: return "2.c";
    case TagType::Hook3: return "3";
    }
    return "?";
}

std::string Tag::name() const {
    switch (type) {
    case TagType::Top: return "top";
    case TagType::Angle2a: return "alpha_{" + std::to_string(i) + "," + std::to_string(k) + "}";
    default: return hook_name(i, j, k);
    }
}

int HookedTree::dom_dimension() const {
    int d = 0;
    for (const Tag& t : tags) d += t.type == TagType::Top ? 0 : t.type == TagType::Angle2a ? 1 : 2;
    return d;
}

std::vector<int> HookedTree::hooked_path(int site) const {
    std::vector<int> path;
    if (site == 1) return path;
    for (int s = site; s != 0; s = tag(s).predecessor) path.push_back(s);
    return path;
}

std::vector<int> HookedTree::draw_order() const {
    std::vector<int> order(tags.size());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = tag(a).depth, db = tag(b).depth;
        return da != db ? da < db : a < b;
    });
    return order;
}

int HookedTree::top_site() const {
    for (const Tag& t : tags)
        if (t.type == TagType::Angle2a) return t.site;
    throw std::logic_error("hooked tree without top angle");
}

HookedTree hooked_tree(const Nest& nest) {
    if (nest.n < 2) throw DomainError(ErrorKind::InvalidInput, "hooked tree needs at least two sites");
    HookedTree t;
    t.nest = nest;
    t.tags.assign(static_cast<std::size_t>(nest.n), Tag{});
    std::vector<char> seen(static_cast<std::size_t>(nest.n), 0);
    auto put = [&](Tag tag) {
        auto& slot = seen[static_cast<std::size_t>(tag.site - 1)];
        if (slot) throw std::logic_error("site tagged twice");
        slot = 1;
        t.tags[static_cast<std::size_t>(tag.site - 1)] = tag;
    };
    for (LabelMask s : nest.nontrivial()) {
        auto subs = nest.maximal_subclusters(s);
        std::vector<int> jl;
        for (LabelMask c : subs) jl.push_back(min_label(c));
        int depth = nest.depth(s) - 1;
        bool top = s == nest.top();
        auto base = [&](std::size_t idx) {
            Tag tag;
            tag.site = jl[idx];
            tag.k = jl[idx];
            tag.parent = s;
            tag.child = subs[idx];
            tag.depth = depth;
            return tag;
        };
        if (top) {
            Tag t0 = base(0);
            t0.type = TagType::Top;
            put(t0);
            Tag t1 = base(1);
            t1.type = TagType::Angle2a;
            t1.i = 1;
            t1.predecessor = 1;
            put(t1);
        } else {
            auto tsubs = nest.maximal_subclusters(*nest.parent(s));
            int i1 = min_label(tsubs[0]), i2 = min_label(tsubs[1]);
            Tag t1 = base(1);
            t1.i = jl[0];
            if (jl[0] > i1) {
                t1.type = TagType::Hook2b;
                t1.j = i1;
                t1.predecessor = jl[0];
            } else {
                t1.type = TagType::Hook2c;
                t1.j = i2;
                t1.predecessor = i2;
            }
            put(t1);
        }
        for (std::size_t idx = 2; idx < subs.size(); ++idx) {
            Tag tt = base(idx);
            tt.type = TagType::Hook3;
            tt.i = jl[0];
            tt.j = jl[1];
            tt.predecessor = jl[1];
            put(tt);
        }
    }
    for (char c : seen)
        if (!c) throw std::logic_error("site without tag");
    return t;
}

HookedTree hooked_tree(const AHPoint& x) { return hooked_tree(nest_of(x)); }

DomPoint tree_values(const HookedTree& t, const AHPoint& x) {
    DomPoint d;
    d.top = x.angle_at(1, t.top_site());
    for (const Tag& tag : t.tags)
        if (tag.is_hook()) d.hooks[tag.site] = x.hook_at(tag.i, tag.j, tag.k);
    return d;
}

DomPoint standard_form(const HookedTree& t, const DomPoint& d) {
    DomPoint s = d;
    s.top = wrap_half(d.top);
    for (const Tag& tag : t.tags) {
        if (!tag.is_hook()) continue;
        Hook& h = s.hooks.at(tag.site);
        if (tag.is_explosion()) {
            double a = wrap_half(h.alpha);
            if (angle_dist(a, h.alpha) > kPi / 2) h.beta = -h.beta;
            h.alpha = a;
        } else {
            if (h.beta < 0) h = klein_swap(h);
            h.alpha = wrap_angle(h.alpha);
        }
    }
    return s;
}

AHPoint standard_form(const AHPoint& x) {
    HookedTree t = hooked_tree(x);
    DomPoint s = standard_form(t, tree_values(t, x));
    AHPoint y = x;
    y.set_angle(1, t.top_site(), s.top);
    for (const Tag& tag : t.tags)
        if (tag.is_hook()) {
            y.hooks.erase({tag.i, tag.k, tag.j});
            y.set_hook(tag.i, tag.j, tag.k, s.hooks.at(tag.site));
        }
    return y;
}

bool is_valid(const HookedTree& t, const DomPoint& x_std, const DomPoint& q) {
    const double lim = kPi / 2 - kTauOrth;
    if (!std::isfinite(q.top) || angle_dist_pi(q.top, x_std.top) >= lim) return false;
    for (const Tag& tag : t.tags) {
        if (!tag.is_hook()) continue;
        auto qi = q.hooks.find(tag.site);
        if (qi == q.hooks.end() || !std::isfinite(qi->second.beta) || !std::isfinite(qi->second.alpha)) return false;
        if (tag.is_explosion()) {
            auto xi = x_std.hooks.find(tag.site);
            if (xi == x_std.hooks.end() || angle_dist_pi(qi->second.alpha, xi->second.alpha) >= lim) return false;
        }
    }
    return true;
}

const Screen& ScreenFill::screen(LabelMask c) const {
    for (const Screen& s : screens)
        if (s.cluster == c) return s;
    throw DomainError(ErrorKind::InvalidInput, "no screen for cluster " + cluster_str(c));
}

bool is_accepted(const ScreenFill& fill, double tau) {
    for (const Screen& s : fill.screens)
        for (std::size_t a = 0; a < s.subclusters.size(); ++a)
            for (std::size_t b = a + 1; b < s.subclusters.size(); ++b)
                for (int u : mask_labels(s.subclusters[a]))
                    for (int v : mask_labels(s.subclusters[b])) {
                        Pt2 d = sub(s.sites.at(u), s.sites.at(v));
                        if (!(std::hypot(d.x, d.y) > tau)) return false;
                    }
    return true;
}

ScreenFill draw_screens(const HookedTree& t, const DomPoint& q) {
    const Nest& z = t.nest;
    ScreenFill fill;
    fill.q = q;
    std::map<LabelMask, double> orient;
    std::vector<int> order = t.draw_order();
    for (LabelMask s : z.nontrivial()) {
        Screen sc;
        sc.cluster = s;
        sc.depth = z.depth(s);
        sc.subclusters = z.maximal_subclusters(s);
        int j1 = min_label(sc.subclusters[0]), j2 = min_label(sc.subclusters[1]);
        double o;
        if (s == z.top()) {
            o = q.top;
        } else {
            LabelMask tc = *z.parent(s);
            auto tsubs = z.maximal_subclusters(tc);
            double ot = orient.at(tc);
            const Hook& h2 = q.hooks.at(j2);
            if (j1 == min_label(tsubs[0])) {
                o = ot + h2.alpha;
            } else if (j1 == min_label(tsubs[1])) {
                o = ot + h2.alpha + kPi;
            } else {
                const Hook& h3 = q.hooks.at(j1);
                o = ot + h3.alpha + h2.alpha + (h3.beta > 0 ? kPi : 0.0);
            }
        }
        o = wrap_angle(o);
        orient[s] = o;
        sc.orientation = o;
        for (int site : order) {
            if ((s & bit(site)) == 0) continue;
            if (site == j1) {
                sc.sites[site] = Pt2{0, 0};
            } else if (site == j2) {
                sc.sites[site] = Pt2{std::cos(o), std::sin(o)};
            } else {
                const Tag& tag = t.tag(site);
                if (!tag.is_hook()) throw std::logic_error("site without hook tag inside a screen");
                auto pi = sc.sites.find(tag.i), pj = sc.sites.find(tag.j);
                if (pi == sc.sites.end() || pj == sc.sites.end())
                    throw std::logic_error("hook reference not drawn before " + std::to_string(site));
                const Hook& h = q.hooks.at(site);
                Pt2 v = rot(sub(pj->second, pi->second), h.alpha);
                sc.sites[site] = add(Pt2{h.beta * v.x, h.beta * v.y}, pi->second);
            }
        }
        fill.screens.push_back(std::move(sc));
    }
    return fill;
}

ScreenFill draw(const HookedTree& t, const DomPoint& x_std, const DomPoint& q, AHMode mode) {
    if (!is_valid(t, x_std, q)) throw DomainError(ErrorKind::InvalidQ, "q is not valid with respect to x");
    DomPoint r = q;
    if (mode == AHMode::XAH) {
        auto nearest = [](double v, double target) {
            double a = wrap_angle(v), b = wrap_angle(v + kPi);
            double da = angle_dist(a, target), db = angle_dist(b, target);
            if (da != db) return da < db ? std::make_pair(a, false) : std::make_pair(b, true);
            return a < b ? std::make_pair(a, false) : std::make_pair(b, true);
        };
        r.top = nearest(q.top, x_std.top).first;
        for (const Tag& tag : t.tags) {
            if (!tag.is_explosion()) continue;
            Hook& h = r.hooks.at(tag.site);
            auto [a, flipped] = nearest(h.alpha, x_std.hooks.at(tag.site).alpha);
            h.alpha = a;
            if (flipped) h.beta = -h.beta;
        }
    }
    return draw_screens(t, r);
}

ScreenFill draw(const AHPoint& x, const DomPoint& q) {
    HookedTree t = hooked_tree(x);
    DomPoint xs = standard_form(t, tree_values(t, x));
    return draw(t, xs, q, x.mode);
}

AHPoint read(const Nest& nest, const ScreenFill& fill, AHMode mode) {
    if (!is_accepted(fill)) throw DomainError(ErrorKind::NotAccepted, "filled screens are not accepted");
    int n = nest.n;
    AHPoint x;
    x.mode = mode;
    x.n = n;
    auto pos = [&](LabelMask s, int i) { return fill.screen(s).sites.at(i); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            LabelMask s = nest.smallest_containing(bit(i) | bit(j));
            Pt2 d = sub(pos(s, j), pos(s, i));
            if (d.x == 0 && d.y == 0)
                throw DomainError(ErrorKind::ReadOffUndefined, "sites coincide in their separating screen");
            x.set_angle(i, j, arg(d));
        }
    auto project = [&](const Pt2& pi, const Pt2& pj, const Pt2& pk, double a) {
        Pt2 u = rot(sub(pj, pi), a);
        return dot(sub(pk, pi), u) / dot(u, u);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                double a = wrap_angle(x.angle_at(i, k) - x.angle_at(i, j));
                LabelMask s = nest.smallest_containing(bit(i) | bit(j) | bit(k));
                Pt2 pi = pos(s, i), pj = pos(s, j), pk = pos(s, k);
                double b;
                if (!(pi == pj)) {
                    b = project(pi, pj, pk, a);
                } else if (!(pi == pk)) {
                    double r = project(pi, pk, pj, wrap_angle(-a));
                    b = r == 0 ? kInf : 1.0 / r;
                } else {
                    throw DomainError(ErrorKind::ReadOffUndefined, "no readable ratio for " + hook_name(i, j, k));
                }
                x.set_hook(i, j, k, Hook{b, a});
            }
    return x;
}

AHPoint realize(const Nest& nest, const DomPoint& tv, AHMode mode) {
    HookedTree t = hooked_tree(nest);
    return read(nest, draw_screens(t, tv), mode);
}

RoundTripReport roundtrip_check(const AHPoint& x, const DomPoint& q, double tol) {
    HookedTree t = hooked_tree(x);
    DomPoint xs = standard_form(t, tree_values(t, x));
    ScreenFill fill = draw(t, xs, q, x.mode);
    AHPoint qt = read(t.nest, fill, x.mode);
    DomPoint back = tree_values(t, qt);
    RoundTripReport rep;
    bool xah = x.mode == AHMode::XAH;
    auto note = [&](double e, const std::string& what) {
        if (e > rep.max_error || rep.worst.empty()) {
            if (e >= rep.max_error) rep.worst = what;
            rep.max_error = std::max(rep.max_error, e);
        }
    };
    note(xah ? angle_dist_pi(back.top, fill.q.top) : angle_dist(back.top, fill.q.top), "top");
    for (const Tag& tag : t.tags) {
        if (!tag.is_hook()) continue;
        const Hook& a = back.hooks.at(tag.site);
        const Hook& b = fill.q.hooks.at(tag.site);
        note(xah ? hook_dist_klein(a, b) : hook_dist(a, b), tag.name());
    }
    rep.pass = rep.max_error < tol;
    return rep;
}

int zero_dom_ratios(const HookedTree& t, const DomPoint& tv, double zero_tol) {
    int m = 0;
    for (const Tag& tag : t.tags)
        if (tag.is_hook() && std::abs(tv.hooks.at(tag.site).beta) <= zero_tol) ++m;
    return m;
}

bool same_fm2_point(const AHPoint& a, const AHPoint& b, double tol) {
    if (a.n != b.n) return false;
    for (const auto& [key, v] : a.angles) {
        auto w = b.angle(key.first, key.second);
        if (!w || angle_dist(v, *w) > tol) return false;
    }
    for (const auto& [key, h] : a.hooks) {
        auto g = b.hook(key[0], key[1], key[2]);
        if (!g || hook_dist(h, *g) > tol) return false;
    }
    return true;
}

std::vector<AHPoint> fiber(const AHPoint& x, int max_zero) {
    HookedTree t = hooked_tree(x);
    DomPoint xs = standard_form(t, tree_values(t, x));
    std::vector<int> zeros;
    for (const Tag& tag : t.tags)
        if (tag.is_hook() && std::abs(xs.hooks.at(tag.site).beta) <= 1e-12) zeros.push_back(tag.site);
    int m = static_cast<int>(zeros.size());
    if (m > max_zero) throw DomainError(ErrorKind::TooManyZeroRatios, std::to_string(m) + " zero ratios in Dom");
    std::vector<AHPoint> out;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << (m + 1)); ++choice) {
        DomPoint q = xs;
        if (choice & 1) q.top = wrap_angle(q.top + kPi);
        for (int z = 0; z < m; ++z)
            if (choice & (std::uint64_t{2} << z)) {
                Hook& h = q.hooks.at(zeros[static_cast<std::size_t>(z)]);
                h.alpha = wrap_angle(h.alpha + kPi);
            }
        AHPoint p = read(t.nest, draw_screens(t, q), AHMode::FM2);
        bool dup = false;
        for (const AHPoint& o : out)
            if (same_fm2_point(o, p)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

double RatioClass::value() const {
    switch (kind) {
    case Kind::Zero: return 0;
    case Kind::Infinite: return kInf;
    case Kind::Finite: return std::sqrt(to_double(value_sq));
    }
    return 0;
}

namespace {

std::vector<const PolySite*> sites_by_label(const SiteSet& s) {
    s.validate();
    int n = static_cast<int>(s.size());
    std::vector<const PolySite*> by(static_cast<std::size_t>(n), nullptr);
    for (const PolySite& p : s.sites) {
        if (p.label < 1 || p.label > n) throw DomainError(ErrorKind::InvalidInput, "labels must be 1..n");
        by[static_cast<std::size_t>(p.label - 1)] = &p;
    }
    return by;
}

Poly dist_sq(const PolySite& a, const PolySite& b) {
    Poly dx = b.x - a.x, dy = b.y - a.y;
    return dx * dx + dy * dy;
}

}  // namespace

std::map<std::array<int, 3>, RatioClass> ratios_from_polysites(const SiteSet& s) {
    auto by = sites_by_label(s);
    int n = static_cast<int>(by.size());
    std::map<std::array<int, 3>, RatioClass> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                const PolySite& pi = *by[static_cast<std::size_t>(i - 1)];
                ExtendedRational r = limit_ratio(dist_sq(pi, *by[static_cast<std::size_t>(k - 1)]),
                                                 dist_sq(pi, *by[static_cast<std::size_t>(j - 1)]));
                RatioClass c;
                if (r.is_infinite()) {
                    c.kind = RatioClass::Kind::Infinite;
                } else if (sign(r.value()) == 0) {
                    c.kind = RatioClass::Kind::Zero;
                } else {
                    c.kind = RatioClass::Kind::Finite;
                    c.value_sq = r.value();
                }
                out[{i, j, k}] = c;
            }
    return out;
}

AHPoint chi(const SiteSet& s) {
    auto by = sites_by_label(s);
    int n = static_cast<int>(by.size());
    AHPoint x;
    x.mode = AHMode::FM2;
    x.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            x.set_angle(i, j, direction(*by[static_cast<std::size_t>(i - 1)], *by[static_cast<std::size_t>(j - 1)]).radians());
    for (const auto& [key, c] : ratios_from_polysites(s)) {
        double a = wrap_angle(x.angle_at(key[0], key[2]) - x.angle_at(key[0], key[1]));
        x.set_hook(key[0], key[1], key[2], Hook{c.value(), a});
    }
    return x;
}

SiteSet normal_form_sites(const AHPoint& x, long denominator) {
    HookedTree t = hooked_tree(x);
    ScreenFill fill = draw(x, tree_values(t, x));
    if (!is_accepted(fill)) throw DomainError(ErrorKind::NotAccepted, "draw(x, tv(x)) is not accepted");
    std::vector<PolySite> ps(static_cast<std::size_t>(x.n));
    for (int i = 1; i <= x.n; ++i) ps[static_cast<std::size_t>(i - 1)].label = i;
    for (int site : t.draw_order()) {
        if (site == 1) continue;
        const Tag& tag = t.tag(site);
        int hinge = tag.type == TagType::Angle2a ? 1 : tag.i;
        const Screen& sc = fill.screen(tag.parent);
        Pt2 d = sub(sc.sites.at(site), sc.sites.at(hinge));
        auto e = static_cast<std::size_t>(t.nest.depth(tag.parent));
        const PolySite& h = ps[static_cast<std::size_t>(hinge - 1)];
        PolySite& p = ps[static_cast<std::size_t>(site - 1)];
        p.x = h.x + Poly::monomial(rationalize(d.x, denominator), e);
        p.y = h.y + Poly::monomial(rationalize(d.y, denominator), e);
    }
    SiteSet out;
    out.sites = std::move(ps);
    out.validate();
    return out;
}

std::size_t ClickableScreen::screen_count() const {
    std::size_t c = 1;
    for (const ClickableScreen& ch : children) c += ch.screen_count();
    return c;
}

namespace {

Pt2 unit(const DirectionVector& d) {
    double x = to_double(d.dx), y = to_double(d.dy);
    double l = std::hypot(x, y);
    return {x / l, y / l};
}

ClickableScreen click_screen(const HookedTree& t, const ScreenFill& fill, LabelMask c) {
    const Screen& sc = fill.screen(c);
    ClickableScreen out;
    out.cluster = mask_labels(c);
    out.orientation = sc.orientation;
    // a cluster shows as one point, its lowest label
    for (LabelMask d : sc.subclusters) out.sites.emplace_back(min_label(d), sc.sites.at(min_label(d)));

    GammaDataSet g;
    for (LabelMask d : sc.subclusters) {
        int l = min_label(d);
        const Pt2& p = sc.sites.at(l);
        g.labels.push_back(l);
        g.points.push_back(Pt{rationalize(p.x, 1000000), rationalize(p.y, 1000000)});
    }
    g.fill_point_directions();
    LimitDiagram diag = voronoi_from_gamma(g);
    for (LabelMask d : sc.subclusters) {
        const Cell& cell = diag.cell(min_label(d));
        ClickCell cc;
        cc.owner = mask_labels(d);
        for (const Pt& v : cell.region) cc.polygon.push_back(Pt2{to_double(v.x), to_double(v.y)});
        for (const DirectionVector& r : cell.rays) cc.rays.push_back(unit(r));
        out.cells.push_back(std::move(cc));
    }
    for (LabelMask d : sc.subclusters) {
        if (mask_size(d) < 2) continue;
        ClickableScreen child = click_screen(t, fill, d);
        std::vector<Pt2> dirs;
        for (const ClickCell& cc : child.cells)
            for (const Pt2& r : cc.rays) {
                bool dup = false;
                for (const Pt2& e : dirs)
                    if (std::abs(e.x - r.x) < 1e-12 && std::abs(e.y - r.y) < 1e-12) dup = true;
                if (!dup) dirs.push_back(r);
            }
        std::sort(dirs.begin(), dirs.end(), [](const Pt2& a, const Pt2& b) { return arg(a) < arg(b); });
        for (const Pt2& r : dirs) out.paste_rays.push_back(PasteRay{mask_labels(d), sc.sites.at(min_label(d)), r});
        out.children.push_back(std::move(child));
    }
    return out;
}

}  // namespace

ClickableScreen clickable_diagram(const AHPoint& x) {
    HookedTree t = hooked_tree(x);
    ScreenFill fill = draw(x, tree_values(t, x));
    if (!is_accepted(fill)) throw DomainError(ErrorKind::NotAccepted, "draw(x, tv(x)) is not accepted");
    return click_screen(t, fill, t.nest.top());
}

}  // namespace limitvor
