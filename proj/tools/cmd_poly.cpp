#include <fstream>

#include "commands.hpp"
#include "cubical/diag.hpp"
#include "cubical/io.hpp"
#include "cubical/polygonal.hpp"

namespace cli {

using namespace cubical;

namespace {

struct ComplexInput {
    std::string text;
    poly::PolygonalComplex x;
};

ComplexInput load(const std::string& path) {
    ComplexInput in;
    in.text = io::read_file(path);
    in.x = poly::load_complex(in.text);
    return in;
}

Report make(const std::string& command, const std::string& path, const std::string& text) {
    Report r;
    r.command = command;
    r.set_input(path, text);
    r.anchors = anchors_for(command);
    return r;
}

json edge_names(const poly::PolygonalComplex& x, const std::vector<EdgeId>& es) {
    json out = json::array();
    for (EdgeId e : es) out.push_back(x.edges[static_cast<std::size_t>(e)].name);
    return out;
}

json polygon_names(const poly::PolygonalComplex& x, const std::vector<int>& ps) {
    json out = json::array();
    for (int p : ps) out.push_back(x.polygons[static_cast<std::size_t>(p)].name);
    return out;
}

json vertex_names(const poly::PolygonalComplex& x, const Bitset& s) {
    json out = json::array();
    for (VertexId v : members(s)) out.push_back(x.vertex_names[static_cast<std::size_t>(v)]);
    return out;
}

json piece_json(const poly::PolygonalComplex& x, const poly::PolyPiece& p) {
    json out = json::object();
    out["polygons"] = polygon_names(x, {p.first, p.second});
    out["edges"] = edge_names(x, p.edges);
    out["length"] = p.length();
    return out;
}

void register_all(CLI::App& app, Dispatch& d) {
    auto* pc = app.add_subcommand("poly", "Polygonal complexes and their dual cube complexes");
    pc->require_subcommand(1);
    struct Args {
        std::string file, lambda = "1/4", out, labels, vertex;
        int c = 4, t = 4, r = 3;
    };
    auto args = std::make_shared<Args>();
    const Options& opts = d.options;

    auto* val = pc->add_subcommand("validate", "Structural validation and vertex links");
    val->add_option("file", args->file, "Complex file")->required();
    d.bind(val, [args] {
        auto in = load(args->file);
        Report r = make("poly validate", args->file, in.text);
        r.add("vertices", in.x.vertex_count());
        r.add("edges", in.x.edge_count());
        r.add("polygons", in.x.polygon_count());
        int isolated = 0;
        for (EdgeId e = 0; e < in.x.edge_count(); ++e) isolated += in.x.isolated(e) ? 1 : 0;
        r.add("isolated_edges", isolated);
        json links = json::object();
        for (VertexId v = 0; v < in.x.vertex_count(); ++v) {
            json l = json::object();
            l["nodes"] = edge_names(in.x, in.x.links[static_cast<std::size_t>(v)].nodes);
            l["corners"] = in.x.links[static_cast<std::size_t>(v)].corners.size();
            const auto cyc = poly::shortest_link_cycle(in.x, v);
            l["shortest_cycle"] = cyc ? cyc->length() : 0;
            links[in.x.vertex_names[static_cast<std::size_t>(v)]] = l;
        }
        r.add("links", in.x.vertex_count(), links);
        return r;
    });

    auto* scc = pc->add_subcommand("sc", "C'(lambda), C(n) and T(n) for a polygonal complex");
    scc->add_option("file", args->file, "Complex file")->required();
    scc->add_option("--lambda", args->lambda, "Rational in (0,1)");
    scc->add_option("--c", args->c, "n of the C(n) condition")->check(CLI::PositiveNumber);
    scc->add_option("--t", args->t, "n of the T(n) condition")->check(CLI::PositiveNumber);
    d.bind(scc, [args] {
        auto in = load(args->file);
        Report r = make("poly sc", args->file, in.text);
        const auto lambda = sc::parse_rational(args->lambda);
        r.parameters["lambda"] = sc::format_rational(lambda);
        r.parameters["c"] = args->c;
        r.parameters["t"] = args->t;
        const auto v = poly::polygonal_sc_check(in.x, lambda, args->c, args->t);
        r.verdict("Cprime", v.cprime);
        r.verdict("C", v.c);
        r.verdict("T", v.t);
        json pw = nullptr;
        if (v.cprime_witness) {
            pw = piece_json(in.x, *v.cprime_witness);
            pw["measured_against"] = in.x.polygons[static_cast<std::size_t>(v.cprime_polygon)].name;
        }
        r.add("pieces", v.piece_count);
        r.add("max_piece_ratio", sc::format_rational(v.max_ratio), pw);
        json cw = nullptr;
        if (v.c_witness) {
            cw = json::object();
            cw["polygon"] = in.x.polygons[static_cast<std::size_t>(v.c_witness->polygon)].name;
            json cover = json::array();
            for (const auto& p : v.c_witness->cover) cover.push_back(piece_json(in.x, p));
            cw["cover"] = cover;
        }
        r.add("min_piece_cover", v.min_cover < 0 ? json(nullptr) : json(v.min_cover), cw);
        json tw = nullptr;
        if (v.t_witness) {
            tw = json::object();
            tw["vertex"] = in.x.vertex_names[static_cast<std::size_t>(v.t_witness->vertex)];
            tw["link_nodes"] = edge_names(in.x, v.t_witness->nodes);
            tw["corner_polygons"] = polygon_names(in.x, v.t_witness->polygons);
        }
        r.add("link_girth", v.link_girth < 0 ? json(nullptr) : json(v.link_girth), tw);
        if (v.min_cover < 0) r.notes.push_back("no polygon boundary is covered by pieces");
        if (v.link_girth < 0) r.notes.push_back("no vertex link has a cycle of length 3 or more");
        return r;
    });

    auto* walls = pc->add_subcommand("walls", "Hypergraphs, sides and hypercarriers");
    walls->add_option("file", args->file, "Complex file")->required();
    d.bind(walls, [args] {
        auto in = load(args->file);
        Report r = make("poly walls", args->file, in.text);
        const auto ws = poly::hypergraphs(in.x);
        json list = json::array();
        for (const auto& w : ws.walls) {
            json e = json::object();
            e["id"] = "w" + std::to_string(w.id);
            e["dual_edges"] = edge_names(in.x, w.dual_edges);
            json sides = json::array();
            for (const auto& s : w.sides) sides.push_back(vertex_names(in.x, s));
            e["sides"] = sides;
            e["carrier"] = polygon_names(in.x, w.carrier);
            list.push_back(e);
        }
        r.verdict("two_sided", ws.all_two_sided());
        r.add("walls", static_cast<int>(ws.walls.size()), list);
        if (!ws.all_two_sided()) r.notes.push_back("a wall without exactly two sides is evidence against small cancellation");
        const auto sep = poly::polygon_separation_check(in.x, ws);
        json sw = nullptr;
        if (!sep.holds) sw = polygon_names(in.x, {sep.p, sep.q});
        r.verdict("disjoint_polygons_separated", sep.holds);
        r.add("disjoint_polygon_pairs", sep.pairs_checked, sw);
        return r;
    });

    auto* dual = pc->add_subcommand("dual", "Dual cube complex of the wallspace");
    dual->add_option("file", args->file, "Complex file")->required();
    dual->add_option("--out", args->out, "Write the dual graph to this file");
    dual->add_option("--labels", args->labels, "Write the wall-label sidecar to this file");
    d.bind(dual, [args] {
        auto in = load(args->file);
        Report r = make("poly dual", args->file, in.text);
        const auto c = poly::dual_cube_complex(in.x);
        const auto& g = c.graph();
        r.add("vertices", g.vertex_count());
        r.add("edges", g.graph().edge_count());
        r.add("hyperplanes", g.hyperplane_count());
        r.add("dimension", g.dimension());
        const auto gs = max_grid(g);
        r.add("grid_thinness", gs.thinness, nullptr, gs.lower_bound ? "lower_bound" : "exact");
        if (!args->out.empty()) {
            std::ofstream f(args->out);
            if (!f) throw InputError("cannot write '" + args->out + "'");
            f << io::write_graph(g.graph());
            r.parameters["out"] = args->out;
        }
        if (!args->labels.empty()) {
            std::ofstream f(args->labels);
            if (!f) throw InputError("cannot write '" + args->labels + "'");
            f << poly::write_wall_labels(c);
            r.parameters["labels"] = args->labels;
        }
        return r;
    });

    auto* cls = pc->add_subcommand("classify", "Edge-cube / cell-cube classification of maximal cubes");
    cls->add_option("file", args->file, "Complex file")->required();
    d.bind(cls, [args] {
        auto in = load(args->file);
        Report r = make("poly classify", args->file, in.text);
        auto c = poly::dual_cube_complex(in.x);
        const auto cl = poly::classify_maximal_cubes(in.x, c);
        json list = json::array();
        const auto& cubes = c.graph().maximal_cubes();
        for (std::size_t i = 0; i < cubes.size(); ++i) {
            json e = json::object();
            e["dim"] = cubes[i].dim;
            e["tag"] = poly::to_string(c.tags[i].kind);
            if (c.tags[i].kind == poly::CubeTag::CELL_CUBE)
                e["polygon"] = in.x.polygons[static_cast<std::size_t>(c.tags[i].source)].name;
            else if (c.tags[i].kind == poly::CubeTag::EDGE_CUBE)
                e["edge"] = in.x.edges[static_cast<std::size_t>(c.tags[i].source)].name;
            json ws = json::array();
            for (int h : cubes[i].crossing) ws.push_back("w" + std::to_string(c.wall_of_hyperplane[static_cast<std::size_t>(h)]));
            e["walls"] = ws;
            list.push_back(e);
        }
        r.verdict("classified", cl.complete);
        r.add("maximal_cubes", static_cast<int>(cubes.size()), list);
        r.add("unmatched", static_cast<int>(cl.unmatched.size()));
        return r;
    });

    auto* proj = pc->add_subcommand("project", "Projection from the dual back to the complex");
    proj->add_option("file", args->file, "Complex file")->required();
    proj->add_option("--vertex", args->vertex, "Dual vertex (default: all)");
    proj->add_option("-R", args->r, "Largest R of the separation-transfer check")->check(CLI::NonNegativeNumber);
    d.bind(proj, [args, &opts] {
        auto in = load(args->file);
        Report r = make("poly project", args->file, in.text);
        r.parameters["R"] = args->r;
        auto c = poly::dual_cube_complex(in.x);
        poly::classify_maximal_cubes(in.x, c);
        const auto& g = c.graph().graph();
        std::vector<VertexId> targets;
        if (!args->vertex.empty()) {
            r.parameters["vertex"] = args->vertex;
            targets.push_back(vertex_arg(g, args->vertex));
        } else {
            for (VertexId v = 0; v < g.vertex_count(); ++v) targets.push_back(v);
        }
        json list = json::object();
        bool all_ok = true;
        for (VertexId v : targets) {
            const auto p = poly::dual_projection(in.x, c, v);
            json e = json::object();
            e["point"] = poly::format_point(in.x, p.point);
            e["polygons"] = polygon_names(in.x, p.polygons);
            if (!p.note.empty()) e["note"] = p.note;
            list[g.name(v)] = e;
            all_ok = all_ok && p.intersection_ok;
        }
        r.verdict("intersection_nonempty", all_ok);
        r.add("projections", static_cast<int>(targets.size()), list);
        const int limit = opts.seed_cap > 0 ? static_cast<int>(opts.seed_cap) : 400;
        const auto t = poly::separation_transfer(in.x, c, args->r, limit);
        json tw = nullptr;
        if (t.u >= 0) {
            tw = json::object();
            tw["pair"] = json::array({g.name(t.u), g.name(t.w)});
            tw["dual_chain"] = t.dual_chain;
            tw["wall_chain"] = t.wall_chain;
            json ws = json::array();
            for (int w : t.walls) ws.push_back("w" + std::to_string(w));
            tw["walls"] = ws;
        }
        r.verdict("separation_transfer", t.holds);
        r.add("transfer_pairs", t.pairs_checked, tw, g.vertex_count() <= limit ? "exact" : "one_sided");
        return r;
    });
}

}  // namespace

void register_poly_commands(CLI::App& app, Dispatch& d) { register_all(app, d); }

}  // namespace cli
