#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include "commands.hpp"
#include "cubical/coneoff.hpp"
#include "cubical/diag.hpp"
#include "cubical/io.hpp"

namespace cli {

using namespace cubical;

GraphInput load_graph(const std::string& path) {
    GraphInput in;
    in.text = io::read_file(path);
    in.graph = io::parse_graph(in.text);
    return in;
}

VertexId vertex_arg(const Graph& g, const std::string& name) {
    auto v = g.find(name);
    if (!v) throw InputError("unknown vertex '" + name + "'");
    return *v;
}

json names(const Graph& g, const std::vector<VertexId>& vs) {
    json out = json::array();
    for (VertexId v : vs) out.push_back(g.name(v));
    return out;
}

json names(const Graph& g, const Bitset& s) { return names(g, members(s)); }

namespace {

Metric parse_metric(const std::string& m) { return m == "linf" ? Metric::LINF : Metric::L1; }

json edge_json(const Graph& g, EdgeId e) { return json::array({g.name(g.edge(e).u), g.name(g.edge(e).v)}); }

json grid_json(const Grid& grid) {
    json out = json::object();
    out["verticals"] = grid.verticals;
    out["horizontals"] = grid.horizontals;
    return out;
}

json rectangle_json(const Graph& g, const FlatRectangle& r) {
    json rows = json::array();
    for (int i = 0; i <= r.a; ++i) {
        json row = json::array();
        for (int j = 0; j <= r.b; ++j) row.push_back(g.name(r.at(i, j)));
        rows.push_back(row);
    }
    json out = json::object();
    out["a"] = r.a;
    out["b"] = r.b;
    out["rows"] = rows;
    return out;
}

// Subsets come from `sub` lines of the graph file unless a separate file is given.
std::vector<FamilyMember> load_family(const GraphInput& in, const std::string& subsets_path) {
    const std::string text = subsets_path.empty() ? in.text : io::read_file(subsets_path);
    std::vector<FamilyMember> out;
    for (const auto& s : io::parse_subsets(text, in.graph))
        out.push_back(FamilyMember{s.name, vertex_set(in.graph, s.vertices)});
    return out;
}

Bitset find_subset(const GraphInput& in, const std::string& subsets_path, const std::string& name) {
    for (auto& m : load_family(in, subsets_path))
        if (m.name == name) return m.vertices;
    throw InputError("no subset named '" + name + "'");
}

MedianGraph median_of(const GraphInput& in) { return MedianGraph(in.graph); }

int scan_limit(const Options& o, int fallback) { return o.seed_cap > 0 ? static_cast<int>(o.seed_cap) : fallback; }

Report make(const std::string& command, const std::string& path, const std::string& text) {
    Report r;
    r.command = command;
    r.set_input(path, text);
    r.anchors = anchors_for(command);
    return r;
}

void register_median(CLI::App& app, Dispatch& d) {
    auto* median = app.add_subcommand("median", "Median graph structure");
    median->require_subcommand(1);
    struct Args {
        std::string file, x, y, z, metric = "l1", sub, subsets, vertex, set;
    };
    auto args = std::make_shared<Args>();

    auto* check = median->add_subcommand("check", "Exhaustive median test");
    check->add_option("file", args->file, "Graph file")->required();
    d.bind(check, [args] {
        auto in = load_graph(args->file);
        Report r = make("median check", args->file, in.text);
        if (!in.graph.is_connected()) {
            r.verdict("median", false);
            r.notes.push_back("graph is disconnected");
            return r;
        }
        const auto v = is_median(in.graph);
        r.verdict("median", v.median);
        json w = nullptr;
        if (v.witness) {
            w = json::object();
            w["triple"] = names(in.graph, std::vector<VertexId>(v.witness->begin(), v.witness->end()));
            w["median_count"] = v.witness_median_count;
        }
        r.add("median", v.median, w);
        r.add("vertices", in.graph.vertex_count());
        r.add("edges", in.graph.edge_count());
        return r;
    });

    auto* hyp = median->add_subcommand("hyperplanes", "Hyperplanes, halfspaces and transversality");
    hyp->add_option("file", args->file, "Graph file")->required();
    d.bind(hyp, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("median hyperplanes", args->file, in.text);
        json list = json::array();
        for (const auto& h : g.hyperplanes()) {
            json e = json::object();
            e["id"] = h.id;
            json dual = json::array();
            for (EdgeId de : h.dual_edges) dual.push_back(edge_json(g.graph(), de));
            e["dual_edges"] = dual;
            e["halfspace_a"] = names(g.graph(), h.halfspace_a);
            e["halfspace_b"] = names(g.graph(), h.halfspace_b);
            e["dimension"] = h.dimension;
            e["transverse"] = members(g.transverse_set(h.id));
            list.push_back(e);
        }
        r.add("hyperplane_count", g.hyperplane_count(), list);
        r.add("dimension", g.dimension());
        return r;
    });

    auto* dist = median->add_subcommand("dist", "l1 or l-infinity distance");
    dist->add_option("file", args->file, "Graph file")->required();
    dist->add_option("x", args->x)->required();
    dist->add_option("y", args->y)->required();
    dist->add_option("--metric", args->metric, "l1 or linf")->check(CLI::IsMember({"l1", "linf"}));
    d.bind(dist, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        const VertexId x = vertex_arg(g.graph(), args->x), y = vertex_arg(g.graph(), args->y);
        Report r = make("median dist", args->file, in.text);
        r.parameters["metric"] = args->metric;
        r.parameters["x"] = args->x;
        r.parameters["y"] = args->y;
        const Metric m = parse_metric(args->metric);
        json w = json::object();
        if (m == Metric::L1) {
            w["separating_hyperplanes"] = g.separating(x, y);
        } else {
            const auto chain = g.disjoint_chain(x, y);
            w["disjoint_chain"] = chain.hyperplanes;
            w["coneoff_distance"] = g.linf_distances()(x, y);
        }
        r.add("distance", g.dist(m, x, y), w);
        return r;
    });

    auto* med = median->add_subcommand("median", "Median of three vertices");
    med->add_option("file", args->file, "Graph file")->required();
    med->add_option("x", args->x)->required();
    med->add_option("y", args->y)->required();
    med->add_option("z", args->z)->required();
    d.bind(med, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("median median", args->file, in.text);
        const VertexId m =
            g.median(vertex_arg(g.graph(), args->x), vertex_arg(g.graph(), args->y), vertex_arg(g.graph(), args->z));
        r.parameters["triple"] = json::array({args->x, args->y, args->z});
        r.add("median", g.graph().name(m));
        return r;
    });

    auto* cubes = median->add_subcommand("cubes", "Maximal cube inventory");
    cubes->add_option("file", args->file, "Graph file")->required();
    d.bind(cubes, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("median cubes", args->file, in.text);
        json list = json::array();
        std::map<int, int> by_dim;
        for (const auto& c : g.maximal_cubes()) {
            json e = json::object();
            e["dim"] = c.dim;
            e["hyperplanes"] = c.crossing;
            e["vertices"] = names(g.graph(), c.vertices);
            list.push_back(e);
            ++by_dim[c.dim];
        }
        json counts = json::object();
        for (auto [dim, n] : by_dim) counts[std::to_string(dim)] = n;
        r.add("maximal_cubes", static_cast<int>(g.maximal_cubes().size()), list);
        r.add("count_by_dimension", counts);
        return r;
    });

    auto* convex = median->add_subcommand("convex", "Convexity of a named subset");
    convex->add_option("file", args->file, "Graph file")->required();
    convex->add_option("--sub", args->sub, "Subset name")->required();
    convex->add_option("--subsets", args->subsets, "File with 'sub' lines (default: the graph file)");
    d.bind(convex, [args] {
        auto in = load_graph(args->file);
        Report r = make("median convex", args->file, in.text);
        r.parameters["sub"] = args->sub;
        const Bitset s = find_subset(in, args->subsets, args->sub);
        const DistanceMatrix dm(in.graph);
        const auto v = is_convex(in.graph, dm, s);
        r.verdict("convex", v.convex);
        json w = nullptr;
        if (!v.convex) {
            w = json::object();
            w["geodesic"] = names(in.graph, v.geodesic);
            w["outside"] = in.graph.name(v.outside);
        }
        r.add("convex", v.convex, w);
        return r;
    });

    auto* proj = median->add_subcommand("project", "Gate projection onto a convex subset");
    proj->add_option("file", args->file, "Graph file")->required();
    proj->add_option("--sub", args->sub, "Convex subset to project onto")->required();
    auto* vopt = proj->add_option("--vertex", args->vertex, "Vertex to project");
    auto* sopt = proj->add_option("--set", args->set, "Second convex subset to project");
    vopt->excludes(sopt);
    proj->add_option("--subsets", args->subsets, "File with 'sub' lines (default: the graph file)");
    d.bind(proj, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("median project", args->file, in.text);
        r.parameters["sub"] = args->sub;
        const Bitset c = find_subset(in, args->subsets, args->sub);
        if (!args->vertex.empty()) {
            r.parameters["vertex"] = args->vertex;
            const auto p = project(g, c, vertex_arg(g.graph(), args->vertex));
            json w = json::object();
            w["distance"] = p.distance;
            r.add("gate", g.graph().name(p.image), w);
        } else {
            if (args->set.empty()) throw InputError("give --vertex or --set");
            r.parameters["set"] = args->set;
            const auto p = project(g, c, find_subset(in, args->subsets, args->set));
            json w = json::object();
            w["crossing_image"] = p.crossing_image;
            w["crossing_both"] = p.crossing_both;
            r.add("image", names(g.graph(), p.image), w);
        }
        return r;
    });
}

void register_diag(CLI::App& app, Dispatch& d) {
    auto* diag = app.add_subcommand("diag", "Hyperbolicity diagnostics");
    diag->require_subcommand(1);
    struct Args {
        std::string file, metric = "l1", subsets, probe_u, probe_v;
        long cap = kDefaultGridCap;
        int n = 2;
        int probe_length = 0;
        bool sample = false;
    };
    auto args = std::make_shared<Args>();
    const Options& opts = d.options;

    auto* grid = diag->add_subcommand("grid", "Largest grids of hyperplanes");
    grid->add_option("file", args->file, "Graph file")->required();
    grid->add_option("--cap", args->cap, "Search node cap")->check(CLI::PositiveNumber);
    d.bind(grid, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("diag grid", args->file, in.text);
        r.parameters["cap"] = args->cap;
        const auto s = max_grid(g, args->cap);
        json pareto = json::array();
        for (std::size_t i = 0; i < s.pareto.size(); ++i) {
            json e = json::object();
            e["p"] = s.pareto[i].first;
            e["q"] = s.pareto[i].second;
            e["grid"] = grid_json(s.witnesses[i]);
            pareto.push_back(e);
        }
        const std::string method = s.lower_bound ? "lower_bound" : "exact";
        r.add("thinness", s.thinness, pareto, method);
        r.add("search_nodes", s.nodes);
        return r;
    });

    auto* rect = diag->add_subcommand("rectangle", "Thickest flat rectangle");
    rect->add_option("file", args->file, "Graph file")->required();
    d.bind(rect, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("diag rectangle", args->file, in.text);
        const auto s = max_thick_rectangle(g);
        r.add("thickness", s.thickness, s.witness ? rectangle_json(g.graph(), *s.witness) : json(nullptr));
        return r;
    });

    auto* delta_cmd = diag->add_subcommand("delta", "Four-point hyperbolicity constant");
    delta_cmd->add_option("file", args->file, "Graph file")->required();
    delta_cmd->add_option("--metric", args->metric, "l1 or linf")->check(CLI::IsMember({"l1", "linf"}));
    delta_cmd->add_flag("--sample", args->sample, "Sample 4-tuples above the size limit (lower bound)");
    d.bind(delta_cmd, [args, &opts] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("diag delta", args->file, in.text);
        r.parameters["metric"] = args->metric;
        DeltaOptions o;
        o.max_vertices = scan_limit(opts, o.max_vertices);
        o.sample = args->sample;
        const auto res = delta(g, parse_metric(args->metric), o);
        json w = names(g.graph(), std::vector<VertexId>(res.witness.begin(), res.witness.end()));
        if (res.witness[0] < 0) w = nullptr;
        const std::string method = res.lower_bound ? "lower_bound" : "exact";
        r.add("delta", res.value(), w, method);
        r.add("twice_delta", res.twice_delta, nullptr, method);
        return r;
    });

    auto* bigon = diag->add_subcommand("bigon", "Thinness of geodesic bigons");
    bigon->add_option("file", args->file, "Graph file")->required();
    bigon->add_option("--metric", args->metric, "l1 or linf")->check(CLI::IsMember({"l1", "linf"}));
    d.bind(bigon, [args, &opts] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("diag bigon", args->file, in.text);
        r.parameters["metric"] = args->metric;
        const auto b = bigon_thinness(g, parse_metric(args->metric), scan_limit(opts, 400));
        json w = nullptr;
        if (b.x >= 0) {
            w = json::object();
            w["first"] = names(g.graph(), b.first);
            w["second"] = names(g.graph(), b.second);
            w["far"] = g.graph().name(b.far);
        }
        r.add("bigon_thinness", b.thinness, w);
        return r;
    });

    auto* contr = diag->add_subcommand("contracting", "n-contracting hyperplanes and the contracting graph");
    contr->add_option("file", args->file, "Graph file")->required();
    contr->add_option("-n", args->n, "Grid size n")->check(CLI::PositiveNumber);
    contr->add_option("--cap", args->cap, "Grid search node cap")->check(CLI::PositiveNumber);
    d.bind(contr, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("diag contracting", args->file, in.text);
        r.parameters["n"] = args->n;
        r.parameters["cap"] = args->cap;
        const auto rep = contracting(g, args->n, args->cap);
        json list = json::array();
        int count = 0;
        for (int h = 0; h < g.hyperplane_count(); ++h) {
            json e = json::object();
            e["id"] = h;
            e["dimension"] = g.hyperplane(h).dimension;
            e["contracting"] = static_cast<bool>(rep.contracting[static_cast<std::size_t>(h)]);
            if (rep.grid[static_cast<std::size_t>(h)]) e["grid"] = grid_json(*rep.grid[static_cast<std::size_t>(h)]);
            list.push_back(e);
            count += rep.contracting[static_cast<std::size_t>(h)] ? 1 : 0;
        }
        const std::string method = rep.lower_bound ? "one_sided" : "exact";
        r.add("contracting_count", count, list, method);
        r.add("contracting_graph_diameter", rep.gamma.dist.diameter());
        const auto rc = contracting_rectangle_check(g, rep);
        json w = json::object();
        w["thickness"] = rc.thickness;
        w["bound"] = rc.bound;
        r.add("thick_rectangle_diameter", rc.diameter, w);
        r.verdict("rectangle_bound", rc.holds);
        return r;
    });

    auto* fine = diag->add_subcommand("fineness", "Fineness certificate of a convex family");
    fine->add_option("file", args->file, "Graph file with 'sub' lines")->required();
    fine->add_option("--subsets", args->subsets, "File with 'sub' lines (default: the graph file)");
    fine->add_option("--probe-length", args->probe_length, "Count simple cycles of this length (3..8)");
    fine->add_option("--probe-edge", args->probe_u, "First endpoint of the probed edge");
    fine->add_option("--probe-to", args->probe_v, "Second endpoint of the probed edge");
    d.bind(fine, [args] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("diag fineness", args->file, in.text);
        const auto family = load_family(in, args->subsets);
        const auto cert = fineness_certificate(g, family);
        json mw = nullptr;
        if (cert.multiplicity_edge >= 0) mw = edge_json(g.graph(), cert.multiplicity_edge);
        r.add("edge_multiplicity", cert.multiplicity, mw);
        json cw = nullptr;
        if (cert.witness_a >= 0) {
            cw = json::object();
            cw["members"] = json::array({family[static_cast<std::size_t>(cert.witness_a)].name,
                                         family[static_cast<std::size_t>(cert.witness_b)].name});
            cw["hyperplanes"] = cert.common;
        }
        r.add("max_common_crossings", cert.max_common_crossings, cw);
        if (args->probe_length > 0) {
            const auto apex = cone_off(g, family, ConeKind::APEX);
            const VertexId u = vertex_arg(apex.graph, args->probe_u), v = vertex_arg(apex.graph, args->probe_v);
            const auto probe = count_cycles_through(apex.graph, u, v, args->probe_length);
            r.parameters["probe_length"] = args->probe_length;
            r.parameters["probe_edge"] = json::array({args->probe_u, args->probe_v});
            r.add("cycles_through_edge", probe.count, nullptr, probe.capped ? "lower_bound" : "exact");
        }
        return r;
    });
}

void register_coneoff(CLI::App& app, Dispatch& d) {
    struct Args {
        std::string file, subsets, kind = "clique", out;
    };
    auto args = std::make_shared<Args>();
    auto* co = app.add_subcommand("coneoff", "Cone off a family of convex subsets");
    co->add_option("file", args->file, "Graph file with 'sub' lines")->required();
    co->add_option("--subsets", args->subsets, "File with 'sub' lines (default: the graph file)");
    co->add_option("--kind", args->kind, "clique or apex")->check(CLI::IsMember({"clique", "apex"}));
    co->add_option("--out", args->out, "Write the cone-off graph to this file");
    const Options& opts = d.options;
    d.bind(co, [args, &opts] {
        auto in = load_graph(args->file);
        const auto g = median_of(in);
        Report r = make("coneoff", args->file, in.text);
        r.parameters["kind"] = args->kind;
        const auto family = load_family(in, args->subsets);
        if (family.empty()) throw InputError("no 'sub' lines: the family is empty");
        const ConeKind kind = args->kind == "apex" ? ConeKind::APEX : ConeKind::CLIQUE;
        const auto y = cone_off(g, family, kind);
        r.add("vertices", y.graph.vertex_count());
        r.add("edges", y.graph.edge_count());
        r.add("diameter", y.dist.diameter());
        json prov = json::array();
        if (kind == ConeKind::CLIQUE) {
            for (const auto& e : y.added_edges)
                prov.push_back(json::array({g.graph().name(e.u), g.graph().name(e.v), y.members[static_cast<std::size_t>(e.member)]}));
            r.add("added_edges", static_cast<int>(y.added_edges.size()), prov);
        } else {
            for (std::size_t i = 0; i < y.members.size(); ++i)
                prov.push_back(json::array({y.graph.name(y.apex(static_cast<int>(i))), y.members[i]}));
            r.add("apices", static_cast<int>(y.members.size()), prov);
        }
        const auto clique = kind == ConeKind::CLIQUE ? y : cone_off(g, family, ConeKind::CLIQUE);
        const auto apex = kind == ConeKind::APEX ? y : cone_off(g, family, ConeKind::APEX);
        const auto sw = check_sandwich(clique, apex);
        r.verdict("sandwich", sw.holds);
        json sww = json::object();
        sww["pairs"] = sw.pairs_checked;
        if (!sw.holds) sww["pair"] = json::array({g.graph().name(sw.x), g.graph().name(sw.y)});
        r.add("sandwich_pairs", sw.pairs_checked, sww);
        const auto checks = cone_bigon_checks(g, y, opts.seed_cap > 0 ? static_cast<int>(opts.seed_cap) : 400);
        bool all = true;
        json rows = json::array();
        for (const auto& c : checks) {
            json e = json::object();
            e["L"] = c.thickness;
            e["C"] = c.rectangle_diameter;
            e["bigon_thinness"] = c.bigon_thinness;
            e["bound"] = c.bound;
            rows.push_back(e);
            all = all && c.holds;
        }
        r.verdict("bigon_bound", all);
        r.add("bigon_checks", static_cast<int>(checks.size()), rows);
        if (!args->out.empty()) {
            std::ofstream f(args->out);
            if (!f) throw InputError("cannot write '" + args->out + "'");
            f << io::write_graph(y.graph);
            r.parameters["out"] = args->out;
        }
        return r;
    });
}

}  // namespace

void register_graph_commands(CLI::App& app, Dispatch& d) {
    register_median(app, d);
    register_diag(app, d);
    register_coneoff(app, d);
}

}  // namespace cli
