#include "limitvor/io.hpp"

#include "limitvor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace limitvor {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::pair<int, int> parse_pair_key(const std::string& k) {
    auto c = k.find(',');
    if (c == std::string::npos) throw ParseError("bad pair key '" + k + "'");
    try {
        return {std::stoi(k.substr(0, c)), std::stoi(k.substr(c + 1))};
    } catch (const std::exception&) {
        throw ParseError("bad pair key '" + k + "'");
    }
}

// "i;j,k" for h^{ik}_{ij}.
std::array<int, 3> parse_hook_key(const std::string& k) {
    auto s = k.find(';');
    if (s == std::string::npos) throw ParseError("bad hook key '" + k + "'");
    try {
        auto [j, kk] = parse_pair_key(k.substr(s + 1));
        return {std::stoi(k.substr(0, s)), j, kk};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad hook key '" + k + "'");
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

double number(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        try {
            return std::stod(s);
        } catch (const std::exception&) {
        }
    }
    throw ParseError("expected a number");
}

json number_json(double v) {
    if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
    return v;
}

}  // namespace

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("rational must be a string or an integer");
}

json rational_json(const Rational& r) { return to_string(r); }

json extended_json(const ExtendedRational& r) { return r.str(); }

Poly poly_from_json(const json& j) {
    if (!j.is_array()) {
        return Poly(rational_from_json(j));
    }
    std::vector<Rational> c;
    for (const json& e : j) c.push_back(rational_from_json(e));
    return Poly(std::move(c));
}

json poly_json(const Poly& p) {
    json a = json::array();
    for (const Rational& c : p.coeffs()) a.push_back(rational_json(c));
    if (a.empty()) a.push_back("0");
    return a;
}

Pt pt_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be [x, y]");
    return Pt{rational_from_json(j[0]), rational_from_json(j[1])};
}

json pt_json(const Pt& p) { return json::array({rational_json(p.x), rational_json(p.y)}); }

json pt2_json(const Pt2& p) { return json::array({p.x, p.y}); }

DirectionVector direction_from_json(const json& j) {
    Pt p = pt_from_json(j);
    if (p.x == 0 && p.y == 0) throw ParseError("direction (0,0)");
    return DirectionVector::primitive(p.x, p.y);
}

json direction_json(const DirectionVector& d) { return json::array({rational_json(d.dx), rational_json(d.dy)}); }

json extended_point_json(const ExtendedPoint& p) { return json::array({p.cx.str(), p.cy.str()}); }

SiteSet siteset_from_json(const json& j) {
    SiteSet s;
    const json& arr = field(j, "sites");
    if (!arr.is_array()) throw ParseError("'sites' must be an array");
    for (const json& e : arr) {
        PolySite p;
        const json& l = field(e, "label");
        if (!l.is_number_integer()) throw ParseError("label must be an integer");
        p.label = l.get<int>();
        p.x = poly_from_json(field(e, "x"));
        p.y = poly_from_json(field(e, "y"));
        s.sites.push_back(std::move(p));
    }
    s.validate();
    return s;
}

json siteset_json(const SiteSet& s) {
    json arr = json::array();
    for (const PolySite& p : s.sites) arr.push_back({{"label", p.label}, {"x", poly_json(p.x)}, {"y", poly_json(p.y)}});
    return {{"sites", arr}};
}

json type_json(const TypeSet& t) {
    json arr = json::array();
    for (const OrientedTriple& o : t) arr.push_back(json::array({o.a, o.b, o.c}));
    return {{"type", arr}};
}

json hull_json(const CircuitHull& cch, const CircuitHull& dh) {
    json dirs = json::array();
    for (const DirectionVector& d : dh.edge_directions) dirs.push_back(direction_json(d));
    return {{"cch", cch.labels}, {"dh", dh.labels}, {"dh_directions", dirs}};
}

json skeleton_json(const Skeleton& sk) {
    json arr = json::array();
    for (const auto& [line, ivs] : sk.lines)
        for (const Interval& iv : ivs) {
            json e = {{"line", json::array({rational_json(line.a), rational_json(line.b), rational_json(line.c)})},
                      {"lo", extended_json(iv.lo)},
                      {"hi", extended_json(iv.hi)}};
            bool ray = iv.lo.is_infinite() != iv.hi.is_infinite();
            bool full = iv.lo.is_infinite() && iv.hi.is_infinite();
            e["kind"] = full ? "line" : ray ? "ray" : (iv.lo == iv.hi ? "point" : "segment");
            arr.push_back(std::move(e));
        }
    for (const Pt& p : sk.points) arr.push_back({{"kind", "point"}, {"at", pt_json(p)}});
    return arr;
}

json diagram_json(const LimitDiagram& d) {
    json cells = json::object();
    for (const Cell& c : d.cells) {
        json v = json::array(), r = json::array();
        for (const Pt& p : c.vertices) v.push_back(pt_json(p));
        for (const DirectionVector& dv : c.rays) r.push_back(direction_json(dv));
        cells[std::to_string(c.label)] = {{"kind", cell_kind_name(c.kind)}, {"vertices", v}, {"rays", r}};
    }
    json out = json::array();
    for (const OutsideEdge& e : d.outside_edges) {
        json o = {{"i", e.i}, {"j", e.j}, {"from", extended_point_json(e.from)}, {"to", extended_point_json(e.to)}};
        if (e.ray) o["ray"] = direction_json(*e.ray);
        out.push_back(std::move(o));
    }
    return {{"cells", cells}, {"skeleton", skeleton_json(d.skeleton)}, {"outside_edges", out}};
}

BBox parse_bbox(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            v.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw ParseError("bad bbox '" + s + "'");
        }
    }
    if (v.size() != 4 || !(v[0] < v[2]) || !(v[1] < v[3])) throw ParseError("bbox must be x0,y0,x1,y1 with x0<x1, y0<y1");
    return BBox{v[0], v[1], v[2], v[3]};
}

std::string diagram_svg(const LimitDiagram& d, const BBox& bb, const std::vector<Pt>& sites) {
    double w = bb.x1 - bb.x0, h = bb.y1 - bb.y0;
    double stroke = std::max(w, h) / 400;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(bb.x0) << " " << num(-bb.y1) << " " << num(w)
       << " " << num(h) << "\">\n";
    // the clip rect lives in the flipped user space of the group
    os << "<defs><clipPath id=\"bb\"><rect x=\"" << num(bb.x0) << "\" y=\"" << num(bb.y0) << "\" width=\"" << num(w)
       << "\" height=\"" << num(h) << "\"/></clipPath></defs>\n";
    os << "<g clip-path=\"url(#bb)\" transform=\"scale(1,-1)\">\n";
    for (const Cell& c : d.cells) {
        if (c.kind == CellKind::Empty) continue;
        std::ostringstream pts;
        for (const Pt& p : c.region) pts << num(to_double(p.x)) << "," << num(to_double(p.y)) << " ";
        if (c.kind == CellKind::ConvexRegion) {
            os << "<polygon class=\"cell\" data-label=\"" << c.label << "\" points=\"" << pts.str()
               << "\" fill=\"#eef\" stroke=\"none\"/>\n";
        } else if (c.kind == CellKind::Point) {
            os << "<circle class=\"cell degenerate\" data-label=\"" << c.label << "\" cx=\""
               << num(to_double(c.region[0].x)) << "\" cy=\"" << num(to_double(c.region[0].y)) << "\" r=\""
               << num(stroke * 3) << "\" fill=\"none\" stroke=\"#c00\" stroke-width=\"" << num(stroke)
               << "\" stroke-dasharray=\"" << num(stroke * 2) << "\"/>\n";
        } else {
            os << "<polyline class=\"cell degenerate\" data-label=\"" << c.label << "\" points=\"" << pts.str()
               << "\" fill=\"none\" stroke=\"#c00\" stroke-width=\"" << num(stroke * 2) << "\" stroke-dasharray=\""
               << num(stroke * 4) << "\"/>\n";
        }
    }
    for (const Seg2& s : skeleton_segments(d.skeleton, bb)) {
        if (s.a == s.b)
            os << "<circle class=\"skeleton\" cx=\"" << num(s.a.x) << "\" cy=\"" << num(s.a.y) << "\" r=\""
               << num(stroke * 1.5) << "\" fill=\"#000\"/>\n";
        else
            os << "<line class=\"skeleton\" x1=\"" << num(s.a.x) << "\" y1=\"" << num(s.a.y) << "\" x2=\"" << num(s.b.x)
               << "\" y2=\"" << num(s.b.y) << "\" stroke=\"#000\" stroke-width=\"" << num(stroke) << "\"/>\n";
    }
    for (const Pt& p : sites)
        os << "<circle class=\"site\" cx=\"" << num(to_double(p.x)) << "\" cy=\"" << num(to_double(p.y)) << "\" r=\""
           << num(stroke * 2) << "\" fill=\"#06c\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

StaticPointSet points_from_json(const json& j) {
    StaticPointSet s;
    if (j.is_object() && j.contains("random")) {
        const json& r = j.at("random");
        s = random_gp_points(field(r, "seed").get<std::uint64_t>(), field(r, "n").get<int>(),
                             r.contains("range") ? r.at("range").get<int>() : 1000);
    } else {
        const json& arr = field(j, "points");
        if (!arr.is_array()) throw ParseError("'points' must be an array");
        for (const json& e : arr) s.points.push_back(pt_from_json(e));
    }
    s.validate();
    return s;
}

json poset_json(const VoronoiPoset& p, const CountVectors& c) {
    json el = json::array();
    for (LabelMask m : p.elements) el.push_back(mask_labels(m));
    return {{"elements", el}, {"f", c.f}, {"c", c.c}, {"v", c.v}, {"e", c.e}, {"f_inf", c.f_inf}};
}

AngleVector angles_from_json(const json& j) {
    AngleVector a;
    std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : "da";
    if (mode == "da")
        a.mode = AngleMode::Directed;
    else if (mode == "ua")
        a.mode = AngleMode::Undirected;
    else
        throw ParseError("mode must be da or ua");
    const json& pairs = field(j, "pairs");
    if (!pairs.is_object()) throw ParseError("'pairs' must be an object");
    int n = 0;
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
        auto [i, k] = parse_pair_key(it.key());
        if (i < 1 || k < 1 || i == k) throw ParseError("bad pair " + it.key());
        DirectionVector d = direction_from_json(field(it.value(), "dir"));
        if (i > k) {
            std::swap(i, k);
            d = d.negated();
        }
        if (a.mode == AngleMode::Undirected) d = d.undirected();
        a.dirs[{i, k}] = d;
        n = std::max(n, k);
    }
    a.n = n;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            if (!a.dirs.count({i, k})) throw ParseError("missing pair " + std::to_string(i) + "," + std::to_string(k));
    return a;
}

json angles_json(const AngleVector& a) {
    json pairs = json::object();
    for (const auto& [key, d] : a.dirs)
        pairs[std::to_string(key.first) + "," + std::to_string(key.second)] = {{"dir", direction_json(d)},
                                                                              {"radians", d.radians()}};
    return {{"mode", a.mode == AngleMode::Directed ? "da" : "ua"}, {"pairs", pairs}};
}

GammaDataSet gamma_from_json(const json& j) {
    GammaDataSet g;
    const json& pts = field(j, "points");
    if (!pts.is_array()) throw ParseError("'points' must be an array");
    for (std::size_t i = 0; i < pts.size(); ++i) g.points.push_back(pt_from_json(pts[i]));
    if (j.contains("labels")) {
        g.labels = j.at("labels").get<std::vector<int>>();
        if (g.labels.size() != g.points.size()) throw ParseError("labels and points differ in length");
    } else {
        for (std::size_t i = 0; i < g.points.size(); ++i) g.labels.push_back(static_cast<int>(i) + 1);
    }
    if (j.contains("dirs"))
        for (auto it = j.at("dirs").begin(); it != j.at("dirs").end(); ++it) {
            auto [a, b] = parse_pair_key(it.key());
            g.set_dir(a, b, direction_from_json(it.value()));
        }
    g.fill_point_directions();
    g.validate();
    return g;
}

ProbeData probe_from_json(const json& j) {
    if (j.is_object() && j.contains("random")) {
        const json& r = j.at("random");
        return random_probe_data(field(r, "seed").get<std::uint64_t>(), field(r, "n").get<int>());
    }
    GammaDataSet g = gamma_from_json(j);
    std::optional<std::vector<Pt>> vel;
    if (j.contains("velocities")) {
        std::vector<Pt> v;
        for (const json& e : j.at("velocities")) v.push_back(pt_from_json(e));
        vel = std::move(v);
    }
    return probe_data_from_gamma(g, vel);
}

AHPoint ah_from_json(const json& j) {
    AHPoint x;
    std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : "FM2";
    if (mode == "XAH")
        x.mode = AHMode::XAH;
    else if (mode == "FM2")
        x.mode = AHMode::FM2;
    else
        throw ParseError("mode must be XAH or FM2");
    bool degrees = j.contains("angle_unit") && j.at("angle_unit") == "deg";
    auto ang = [&](const json& v) { return degrees ? rad(number(v)) : number(v); };
    x.n = field(j, "n").get<int>();
    for (auto it = field(j, "angles").begin(); it != j.at("angles").end(); ++it) {
        auto [a, b] = parse_pair_key(it.key());
        x.set_angle(a, b, ang(it.value()));
    }
    if (j.contains("hooks"))
        for (auto it = j.at("hooks").begin(); it != j.at("hooks").end(); ++it) {
            auto k = parse_hook_key(it.key());
            const json& v = it.value();
            if (!v.is_array() || v.size() != 2) throw ParseError("hook must be [beta, alpha]");
            x.set_hook(k[0], k[1], k[2], Hook{number(v[0]), ang(v[1])});
        }
    return x;
}

json ah_json(const AHPoint& x) {
    json angles = json::object(), hooks = json::object();
    for (const auto& [key, a] : x.angles) angles[std::to_string(key.first) + "," + std::to_string(key.second)] = a;
    for (const auto& [key, h] : x.hooks)
        hooks[std::to_string(key[0]) + ";" + std::to_string(key[1]) + "," + std::to_string(key[2])] =
            json::array({number_json(h.beta), h.alpha});
    return {{"mode", ah_mode_name(x.mode)}, {"n", x.n}, {"angles", angles}, {"hooks", hooks}};
}

Nest nest_from_json(int n, const json& clusters) {
    std::vector<LabelMask> cs;
    for (const json& c : clusters) {
        std::vector<int> labels = c.get<std::vector<int>>();
        for (int l : labels)
            if (l < 1 || l > n) throw ParseError("cluster label out of range");
        cs.push_back(labels_mask(labels));
    }
    return Nest::make(n, cs);
}

json nest_json(const Nest& z) {
    json cs = json::array();
    for (LabelMask c : z.clusters)
        if (mask_size(c) >= 2 && c != z.top()) cs.push_back(mask_labels(c));
    return {{"n", z.n}, {"clusters", cs}, {"str", z.str()}};
}

DomPoint dom_from_json(const json& j, bool degrees) {
    auto ang = [&](const json& v) { return degrees ? rad(number(v)) : number(v); };
    DomPoint d;
    d.top = ang(field(j, "top"));
    if (j.contains("hooks"))
        for (auto it = j.at("hooks").begin(); it != j.at("hooks").end(); ++it) {
            const json& v = it.value();
            if (!v.is_array() || v.size() != 2) throw ParseError("hook must be [beta, alpha]");
            d.hooks[std::stoi(it.key())] = Hook{number(v[0]), ang(v[1])};
        }
    return d;
}

json dom_json(const DomPoint& d) {
    json hooks = json::object();
    for (const auto& [site, h] : d.hooks) hooks[std::to_string(site)] = json::array({number_json(h.beta), h.alpha});
    return {{"top", d.top}, {"hooks", hooks}};
}

json tree_json(const HookedTree& t) {
    json tags = json::array();
    for (const Tag& g : t.tags)
        tags.push_back({{"site", g.site},
                        {"tag", g.name()},
                        {"type", tag_type_name(g.type)},
                        {"predecessor", g.predecessor},
                        {"path", t.hooked_path(g.site)}});
    return {{"nest", nest_json(t.nest)}, {"tags", tags}, {"dom_dimension", t.dom_dimension()}};
}

json fill_json(const ScreenFill& f) {
    json screens = json::array();
    for (const Screen& s : f.screens) {
        json sites = json::array();
        for (const auto& [l, p] : s.sites) sites.push_back({{"label", l}, {"x", p.x}, {"y", p.y}});
        json subs = json::array();
        for (LabelMask c : s.subclusters) subs.push_back(mask_labels(c));
        screens.push_back({{"cluster", mask_labels(s.cluster)},
                           {"depth", s.depth},
                           {"orientation", s.orientation},
                           {"subclusters", subs},
                           {"sites", sites}});
    }
    return {{"screens", screens}, {"q", dom_json(f.q)}};
}

json clickable_json(const ClickableScreen& c) {
    json sites = json::array(), cells = json::array(), rays = json::array(), children = json::array();
    for (const auto& [l, p] : c.sites) sites.push_back({{"label", l}, {"x", p.x}, {"y", p.y}});
    for (const ClickCell& cc : c.cells) {
        json poly = json::array(), r = json::array();
        for (const Pt2& p : cc.polygon) poly.push_back(pt2_json(p));
        for (const Pt2& p : cc.rays) r.push_back(pt2_json(p));
        cells.push_back({{"owner", cc.owner}, {"polygon", poly}, {"rays", r}});
    }
    for (const PasteRay& p : c.paste_rays)
        rays.push_back({{"cluster", p.cluster}, {"from", pt2_json(p.from)}, {"dir", pt2_json(p.dir)}});
    for (const ClickableScreen& ch : c.children) children.push_back(clickable_json(ch));
    return {{"cluster", c.cluster},
            {"orientation", c.orientation},
            {"sites", sites},
            {"cells", cells},
            {"paste_rays", rays},
            {"children", children}};
}

}  // namespace limitvor
