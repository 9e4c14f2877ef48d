#include "limitvor/errors.hpp"
#include "limitvor/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

using namespace limitvor;

namespace {

const char* kVersion = "0.1.0";

struct Opts {
    std::string verb;
    std::string input;
    std::string svg;
    std::string json_out;
    std::string bbox;
    int k = 0;
    std::string mode;
    std::string N = "10";
    std::string deltas = "1e-1,1e-2,1e-3,1e-4";
    std::uint64_t seed = 1;
    int samples = 400;
};

std::string label_list(const std::vector<int>& ls, const char* open, const char* close, bool wide = false) {
    for (int l : ls) wide = wide || l >= 10;
    std::string s = open;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i && wide) s += ",";
        s += std::to_string(ls[i]);
    }
    return s + close;
}

// "1e-3", "0.25", "3/4"
Rational parse_exact(const std::string& s) {
    auto e = s.find_first_of("eE");
    if (e == std::string::npos) return parse_rational(s);
    Rational m = parse_rational(s.substr(0, e));
    int ex = 0;
    try {
        ex = std::stoi(s.substr(e + 1));
    } catch (const std::exception&) {
        throw ParseError("bad number '" + s + "'");
    }
    Integer p = 1;
    for (int i = 0; i < std::abs(ex); ++i) p *= 10;
    return ex >= 0 ? Rational(m * p) : Rational(m / p);
}

std::vector<Rational> parse_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_exact(part));
    if (out.empty()) throw ParseError("empty list");
    return out;
}

void emit(const Opts& o, const json& j) {
    if (!o.json_out.empty()) write_text(o.json_out, j.dump(2) + "\n");
}

std::vector<Pt> points_at_zero(const SiteSet& s) {
    std::vector<Pt> out;
    for (const PolySite& p : s.sites) {
        auto [x, y] = site_at_zero(p);
        out.push_back(Pt{x, y});
    }
    return out;
}

BBox default_bbox(const LimitDiagram& d) {
    return BBox{to_double(d.box.x0), to_double(d.box.y0), to_double(d.box.x1), to_double(d.box.y1)};
}

void print_skeleton(const Skeleton& sk) {
    for (const auto& [line, ivs] : sk.lines)
        for (const Interval& iv : ivs)
            std::cout << "  " << to_string(line.a) << "x + " << to_string(line.b) << "y = " << to_string(line.c) << "  ["
                      << iv.lo.str() << ", " << iv.hi.str() << "]\n";
    for (const Pt& p : sk.points) std::cout << "  point " << p.str() << "\n";
}

int cmd_sites(const Opts& o) {
    SiteSet s = siteset_from_json(load_json(o.input));
    auto v = general_position(s);
    if (!v) {
        std::cout << "OK general position, " << s.size() << " sites\n";
        return 0;
    }
    std::cout << "Violation " << (v->kind == GPViolation::Kind::Collinear ? "collinear" : "cocircular") << " "
              << label_list(v->labels, "{", "}", true) << "\n";
    return 1;
}

int diagram_out(const Opts& o, const LimitDiagram& d, const SiteSet& s) {
    for (const Cell& c : d.cells) std::cout << "cell " << c.label << ": " << cell_kind_name(c.kind) << "\n";
    std::cout << "skeleton:\n";
    print_skeleton(d.skeleton);
    emit(o, diagram_json(d));
    if (!o.svg.empty()) {
        BBox bb = o.bbox.empty() ? default_bbox(d) : parse_bbox(o.bbox);
        write_text(o.svg, diagram_svg(d, bb, points_at_zero(s)));
    }
    return 0;
}

int cmd_limit(const Opts& o) {
    SiteSet s = siteset_from_json(load_json(o.input));
    if (o.verb == "type") {
        TypeSet t = compute_type(s);
        bool wide = false;
        for (const OrientedTriple& tr : t) wide = wide || tr.c >= 10 || tr.b >= 10 || tr.a >= 10;
        std::string out = "{";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out += ",";
            out += label_list({t[i].a, t[i].b, t[i].c}, wide ? "(" : "", wide ? ")" : "", wide);
        }
        std::cout << out << "}\n";
        emit(o, type_json(t));
        return 0;
    }
    if (o.verb == "hull" || o.verb == "dh") {
        CircuitHull cch = combinatorial_convex_hull(s);
        CircuitHull dh = direction_hull(s);
        if (o.verb == "hull") std::cout << "cCH = " << label_list(cch.labels, "(", ")") << "\n";
        std::cout << "DH = " << label_list(dh.labels, "(", ")") << "\n";
        if (o.verb == "dh")
            for (std::size_t i = 0; i < dh.labels.size(); ++i)
                std::cout << "  " << dh.labels[i] << " -> " << dh.labels[(i + 1) % dh.labels.size()] << "  "
                          << dh.edge_directions[i].str() << "\n";
        emit(o, hull_json(cch, dh));
        return 0;
    }
    if (o.verb == "shape") return diagram_out(o, zero_cluster_shape(s), s);
    if (o.verb == "plug") return diagram_out(o, plug(s), s);
    // outside
    std::vector<OutsideEdge> es = outside_edges(s);
    json arr = json::array();
    for (const OutsideEdge& e : es) {
        std::cout << "e(" << e.i << "," << e.j << "): " << e.from.str() << " -> " << e.to.str();
        if (e.ray) std::cout << " ray " << e.ray->str();
        std::cout << "\n";
        json j = {{"i", e.i}, {"j", e.j}, {"from", extended_point_json(e.from)}, {"to", extended_point_json(e.to)}};
        if (e.ray) j["ray"] = direction_json(*e.ray);
        arr.push_back(j);
    }
    emit(o, {{"outside_edges", arr}});
    return 0;
}

int cmd_korder(const Opts& o) {
    StaticPointSet s = points_from_json(load_json(o.input));
    int n = static_cast<int>(s.size());
    if (o.verb == "all") {
        if (o.k < 0 || o.k >= n) throw DomainError(ErrorKind::InvalidInput, "--k must lie in 1..n-1");
        std::vector<KDiagram> ds = all_order_diagrams(s);
        json arr = json::array();
        for (const KDiagram& d : ds) {
            if (o.k && d.k != o.k) continue;
            std::cout << "V_" << d.k << ": " << d.cells.size() << " cells, " << d.vertices.size() << " vertices, "
                      << d.edges.size() << " edges (" << d.unbounded_edges() << " unbounded)\n";
            json cells = json::array(), verts = json::array(), edges = json::array();
            for (LabelMask c : d.cells) cells.push_back(mask_labels(c));
            for (const KVertex& v : d.vertices)
                verts.push_back({{"center", pt_json(v.center)},
                                 {"new", v.is_new},
                                 {"cells", json::array({mask_labels(v.cells[0]), mask_labels(v.cells[1]),
                                                        mask_labels(v.cells[2])})}});
            for (const KEdge& e : d.edges) {
                json je = {{"cells", json::array({mask_labels(e.left), mask_labels(e.right)})}, {"vertices", e.vertices}};
                if (e.ray) je["ray"] = json::array({rational_json(e.ray->first), rational_json(e.ray->second)});
                edges.push_back(je);
            }
            arr.push_back({{"k", d.k}, {"cells", cells}, {"vertices", verts}, {"edges", edges}});
        }
        emit(o, {{"orders", arr}});
        return 0;
    }
    if (o.verb == "poset") {
        VoronoiPoset p = voronoi_poset(s);
        CountVectors c = count_vectors(s, p, circles(s), all_order_diagrams(s));
        json j = poset_json(p, c);
        std::cout << j.dump() << "\n";
        emit(o, j);
        return 0;
    }
    SymmetryReport r = verify_symmetries(s);
    for (const CheckResult& c : r.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    auto vec = [](const std::vector<long>& v) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
        return out + ")";
    };
    std::cout << "f~ = " << vec(r.counts.f_red) << "\n";
    std::cout << "c~ = " << vec(r.counts.c_red) << "\n";
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    emit(o, {{"checks", checks}, {"f_red", r.counts.f_red}, {"c_red", r.counts.c_red}});
    return r.all_pass() ? 0 : 1;
}

int cmd_angles(const Opts& o) {
    json in = load_json(o.input);
    if (o.verb == "map") {
        std::string mode = o.mode.empty() ? "da" : o.mode;
        StaticPointSet s;
        for (const json& e : in.at("points")) s.points.push_back(pt_from_json(e));
        AngleVector a = angle_map(s.points, mode == "ua" ? AngleMode::Undirected : AngleMode::Directed);
        json j = angles_json(a);
        std::cout << j.dump(2) << "\n";
        emit(o, j);
        return 0;
    }
    if (o.verb == "sixslopes") {
        std::vector<Pt> pts;
        for (const json& e : in.at("points")) pts.push_back(pt_from_json(e));
        SlopeConfig cfg = slope_config(pts);
        int n = cfg.n();
        bool all_zero = true;
        json res = json::array();
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rational t = triangle_residual(cfg, i, j);
                all_zero = all_zero && t == 0;
                std::cout << "t_" << i << j << " = " << to_string(t) << "\n";
                res.push_back({{"name", "t_" + std::to_string(i) + "," + std::to_string(j)}, {"value", rational_json(t)}});
            }
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        Rational d = six_slopes(cfg, i, j, k, l);
                        all_zero = all_zero && d == 0;
                        std::cout << "Delta_" << i << j << k << l << " = " << to_string(d) << "\n";
                    }
        std::cout << "T_n membership: " << (tn_membership(cfg) ? "yes" : "no") << "\n";
        emit(o, {{"residuals", res}, {"tn", tn_membership(cfg)}});
        return all_zero ? 0 : 1;
    }
    AngleVector a = angles_from_json(in);
    if (!o.mode.empty() && (o.mode == "ua") != (a.mode == AngleMode::Undirected))
        throw ParseError("--mode disagrees with the input's mode");
    if (o.verb == "classify") {
        if (a.n != 3) throw DomainError(ErrorKind::InvalidInput, "classify needs exactly three labels");
        DA3Class c = classify_da3(a.dir(1, 2), a.dir(1, 3), a.dir(2, 3));
        std::cout << da3_name(c) << "\n";
        emit(o, {{"class", da3_name(c)}});
        return 0;
    }
    Reconstruction r = a.mode == AngleMode::Directed ? reconstruct_da(a) : reconstruct_ua(a);
    json j;
    switch (r.kind) {
    case Reconstruction::Kind::Standard: {
        json pts = json::array();
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            std::cout << "p" << i + 1 << " = " << r.points[i].str() << "\n";
            pts.push_back(pt_json(r.points[i]));
        }
        j = {{"kind", "standard"}, {"points", pts}};
        break;
    }
    case Reconstruction::Kind::CollinearOrder:
        std::cout << "collinear";
        if (r.order_known) std::cout << " order " << label_list(r.order, "(", ")");
        std::cout << "\n";
        j = {{"kind", "collinear"}};
        if (r.order_known) j["order"] = r.order;
        break;
    case Reconstruction::Kind::NotRealizable:
        std::cout << "not realizable\n";
        emit(o, {{"kind", "not_realizable"}});
        return 1;
    }
    emit(o, j);
    return 0;
}

// A point of the compactification from any of: polynomial "sites", an "ah"
// point, or "nest" + "tv" tree values.
AHPoint fm_point(const json& in) {
    if (in.contains("sites")) return chi(siteset_from_json(in));
    bool degrees = in.contains("angle_unit") && in.at("angle_unit") == "deg";
    if (in.contains("ah")) {
        json a = in.at("ah");
        if (degrees && !a.contains("angle_unit")) a["angle_unit"] = "deg";
        return ah_from_json(a);
    }
    if (in.contains("nest") && in.contains("tv")) {
        int n = in.at("n").get<int>();
        AHMode mode = in.contains("mode") && in.at("mode") == "XAH" ? AHMode::XAH : AHMode::FM2;
        return realize(nest_from_json(n, in.at("nest")), dom_from_json(in.at("tv"), degrees), mode);
    }
    throw ParseError("fm input needs \"sites\", \"ah\" or \"nest\" + \"tv\"");
}

void print_ah(const AHPoint& x) {
    for (const auto& [key, a] : x.angles)
        std::cout << "alpha_" << key.first << "," << key.second << " = " << std::lround(deg(a)) << " deg\n";
}

int cmd_fm(const Opts& o) {
    json in = load_json(o.input);
    AHPoint x = fm_point(in);
    bool degrees = in.contains("angle_unit") && in.at("angle_unit") == "deg";
    HookedTree t = hooked_tree(x);
    DomPoint xs = standard_form(t, tree_values(t, x));
    DomPoint q = in.contains("q") ? dom_from_json(in.at("q"), degrees) : xs;
    json out;
    if (o.verb == "chi") {
        out = ah_json(x);
        print_ah(x);
    } else if (o.verb == "nest") {
        std::cout << t.nest.str() << "\n";
        out = nest_json(t.nest);
    } else if (o.verb == "tree") {
        out = tree_json(t);
        std::cout << t.nest.str() << "  dim Dom = " << t.dom_dimension() << "\n";
        for (const Tag& g : t.tags)
            std::cout << "  " << g.site << ": " << g.name() << "  (" << tag_type_name(g.type) << ")\n";
    } else if (o.verb == "draw") {
        ScreenFill f = draw(t, xs, q, x.mode);
        out = fill_json(f);
        for (const Screen& s : f.screens) {
            std::cout << "screen " << mask_str(s.cluster) << " orientation " << deg(s.orientation) << " deg\n";
            for (const auto& [l, p] : s.sites) std::cout << "  " << l << ": (" << p.x << ", " << p.y << ")\n";
        }
    } else if (o.verb == "read") {
        AHPoint back = read(t.nest, draw(t, xs, q, x.mode), x.mode);
        DomPoint tv = tree_values(t, back);
        std::cout << "top alpha_1," << t.top_site() << " = " << std::lround(deg(tv.top)) << " deg\n";
        for (const Tag& g : t.tags)
            if (g.is_hook()) {
                const Hook& h = tv.hooks.at(g.site);
                std::cout << g.name() << " = (" << h.beta << ", " << std::lround(deg(h.alpha)) << " deg)\n";
            }
        print_ah(back);
        out = ah_json(back);
    } else if (o.verb == "roundtrip") {
        RoundTripReport r = roundtrip_check(x, q);
        std::cout << (r.pass ? "PASS" : "FAIL") << " roundtrip max error " << r.max_error << " (" << r.worst << ")\n";
        out = {{"pass", r.pass}, {"max_error", r.max_error}, {"worst", r.worst}};
        emit(o, out);
        return r.pass ? 0 : 1;
    } else if (o.verb == "fiber") {
        std::vector<AHPoint> f = fiber(x);
        std::cout << f.size() << " fiber points\n";
        out = json::array();
        for (const AHPoint& p : f) out.push_back(ah_json(p));
    } else if (o.verb == "export-click") {
        AHPoint y = x;
        y.mode = AHMode::FM2;
        ClickableScreen c = clickable_diagram(y);
        out = clickable_json(c);
        std::cout << c.screen_count() << " screens\n";
        if (o.json_out.empty()) std::cout << out.dump(2) << "\n";
    } else {
        SiteSet s = normal_form_sites(x);
        out = siteset_json(s);
        std::cout << out.dump(2) << "\n";
    }
    emit(o, out);
    return 0;
}

int cmd_continuity(const Opts& o) {
    ProbeData d = probe_from_json(load_json(o.input));
    Rational N = parse_exact(o.N);
    std::vector<Rational> deltas = parse_list(o.deltas);
    if (o.samples <= 0) throw ParseError("--samples must be positive");
    ProbeResult r = continuity_probe(d, N, deltas, o.seed, o.samples);
    json hs = json::array();
    for (std::size_t i = 0; i < r.deltas.size(); ++i) {
        std::cout << "delta " << to_string(r.deltas[i]) << "  h = " << r.h[i] << "\n";
        hs.push_back({{"delta", rational_json(r.deltas[i])}, {"h", r.h[i]}});
    }
    std::cout << "non-increasing: " << (r.non_increasing ? "yes" : "no") << "\n";
    std::cout << "camera fixed: " << (r.camera_fixed ? "yes" : "no") << "\n";
    emit(o, {{"h", hs}, {"non_increasing", r.non_increasing}, {"camera_fixed", r.camera_fixed}});
    return 0;
}

CLI::App* group(CLI::App& app, Opts& o, const char* name, const char* desc, std::vector<std::string> verbs) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("verb", o.verb)->required()->check(CLI::IsMember(verbs));
    sub->add_option("input", o.input, "input JSON file")->required();
    sub->add_option("--json", o.json_out, "write JSON result");
    return sub;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"limitvor: Voronoi diagrams of colliding sites"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Opts o;

    group(app, o, "sites", "site set checks", {"check"});
    CLI::App* limit = group(app, o, "limit", "limit diagrams", {"type", "hull", "dh", "shape", "outside", "plug"});
    limit->add_option("--svg", o.svg, "write SVG");
    limit->add_option("--bbox", o.bbox, "x0,y0,x1,y1");
    CLI::App* korder = group(app, o, "korder", "higher order diagrams", {"all", "poset", "verify"});
    korder->add_option("--k", o.k, "single order");
    CLI::App* angles = group(app, o, "angles", "angle maps", {"map", "recon", "classify", "sixslopes"});
    angles->add_option("--mode", o.mode)->check(CLI::IsMember({"da", "ua"}));
    group(app, o, "fm", "hooks, screens and clickable diagrams",
          {"chi", "nest", "tree", "draw", "read", "roundtrip", "fiber", "export-click", "normal-form"});
    CLI::App* cont = group(app, o, "continuity", "continuity probe", {"probe"});
    cont->add_option("--N", o.N, "camera radius");
    cont->add_option("--deltas", o.deltas, "comma separated");
    cont->add_option("--seed", o.seed);
    cont->add_option("--samples", o.samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("sites")) return cmd_sites(o);
        if (app.got_subcommand("limit")) return cmd_limit(o);
        if (app.got_subcommand("korder")) return cmd_korder(o);
        if (app.got_subcommand("angles")) return cmd_angles(o);
        if (app.got_subcommand("fm")) return cmd_fm(o);
        return cmd_continuity(o);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
