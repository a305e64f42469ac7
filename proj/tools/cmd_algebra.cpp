#include <fstream>

#include "commands.hpp"
#include "cubical/io.hpp"
#include "cubical/racg.hpp"
#include "cubical/smallcancel.hpp"

namespace cli {

using namespace cubical;

namespace {

Report make(const std::string& command, const std::string& path, const std::string& text) {
    Report r;
    r.command = command;
    r.set_input(path, text);
    r.anchors = anchors_for(command);
    return r;
}

json sets_json(const Graph& gamma, const std::vector<racg::VertexSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(names(gamma, s));
    return out;
}

void register_racg(CLI::App& app, Dispatch& d) {
    auto* racg_cmd = app.add_subcommand("racg", "Right-angled Coxeter groups from a defining graph");
    racg_cmd->require_subcommand(1);
    struct Args {
        std::string file, word, compare, out, seed = "joins";
        int radius = 2;
        int check_radius = 0;
    };
    auto args = std::make_shared<Args>();
    const Options& opts = d.options;

    auto* nf = racg_cmd->add_subcommand("nf", "Normal form of a word");
    nf->add_option("file", args->file, "Defining graph file")->required();
    nf->add_option("word", args->word, "Generator word, letters separated by spaces")->required();
    nf->add_option("--compare", args->compare, "Second word to test for equality");
    d.bind(nf, [args] {
        auto in = load_graph(args->file);
        Report r = make("racg nf", args->file, in.text);
        r.parameters["word"] = args->word;
        const auto w = racg::parse_word(in.graph, args->word);
        const auto n = racg::normal_form(in.graph, w);
        r.add("normal_form", n.empty() ? std::string("e") : racg::format_word(in.graph, n));
        r.add("length", static_cast<int>(n.size()));
        if (!args->compare.empty()) {
            r.parameters["compare"] = args->compare;
            const bool same = racg::same_element(in.graph, w, racg::parse_word(in.graph, args->compare));
            r.add("equal", same);
        }
        return r;
    });

    auto* ball = racg_cmd->add_subcommand("ball", "Word-length ball of the Cayley graph");
    ball->add_option("file", args->file, "Defining graph file")->required();
    ball->add_option("-r,--radius", args->radius, "Radius")->check(CLI::NonNegativeNumber);
    ball->add_option("--out", args->out, "Write the ball graph to this file");
    d.bind(ball, [args] {
        auto in = load_graph(args->file);
        Report r = make("racg ball", args->file, in.text);
        r.parameters["radius"] = args->radius;
        const auto b = racg::ball(in.graph, args->radius);
        r.add("vertices", b.graph.vertex_count());
        r.add("edges", b.graph.edge_count());
        r.add("edge_classes", b.label_count, nullptr, "one_sided");
        const auto v = is_median(b.graph);
        json w = nullptr;
        if (v.witness) w = names(b.graph, std::vector<VertexId>(v.witness->begin(), v.witness->end()));
        r.add("median", v.median, w);
        r.notes.push_back("edge classes are computed two steps further out and can still merge beyond that");
        if (!args->out.empty()) {
            std::ofstream f(args->out);
            if (!f) throw InputError("cannot write '" + args->out + "'");
            f << io::write_graph(b.graph);
            r.parameters["out"] = args->out;
        }
        return r;
    });

    auto* squares = racg_cmd->add_subcommand("squares", "Vertices on induced squares");
    squares->add_option("file", args->file, "Defining graph file")->required();
    d.bind(squares, [args] {
        auto in = load_graph(args->file);
        Report r = make("racg squares", args->file, in.text);
        const auto sq = racg::induced_squares(in.graph);
        r.add("square_vertices", names(in.graph, racg::square_vertices(in.graph)), sets_json(in.graph, sq));
        r.add("induced_squares", static_cast<int>(sq.size()));
        return r;
    });

    auto* contr = racg_cmd->add_subcommand("contracting", "Contracting generators");
    contr->add_option("file", args->file, "Defining graph file")->required();
    contr->add_option("--check-radius", args->check_radius,
                      "Also search balls up to this radius for grids through contracting hyperplanes");
    d.bind(contr, [args] {
        auto in = load_graph(args->file);
        Report r = make("racg contracting", args->file, in.text);
        const auto c = racg::contracting_generators(in.graph);
        json per = json::object();
        for (VertexId v = 0; v < in.graph.vertex_count(); ++v)
            per[in.graph.name(v)] = static_cast<bool>(c.contracting[static_cast<std::size_t>(v)]);
        r.add("contracting", per);
        r.add("star_peripherals", sets_json(in.graph, c.star_peripherals));
        r.add("join_peripherals", sets_json(in.graph, c.join_peripherals));
        if (args->check_radius > 0) {
            r.parameters["check_radius"] = args->check_radius;
            bool ok = true;
            json rows = json::array();
            for (VertexId u = 0; u < in.graph.vertex_count(); ++u) {
                if (!c.contracting[static_cast<std::size_t>(u)]) continue;
                for (int rad = 1; rad <= args->check_radius; ++rad) {
                    const auto chk = racg::ball_grid_check(in.graph, u, rad);
                    json row = json::object();
                    row["generator"] = in.graph.name(u);
                    row["radius"] = rad;
                    row["dimension"] = chk.dimension;
                    row["n"] = chk.n_values;
                    row["grid_found"] = chk.grid_found;
                    rows.push_back(row);
                    for (bool f : chk.grid_found) ok = ok && !f;
                }
            }
            r.verdict("ball_check", ok);
            r.add("ball_checks", static_cast<int>(rows.size()), rows, "one_sided");
        }
        return r;
    });

    auto* jd = racg_cmd->add_subcommand("jdecomp", "Minimal join decomposition with its trace");
    jd->add_option("file", args->file, "Defining graph file")->required();
    jd->add_option("--seed", args->seed, "squares or joins")->check(CLI::IsMember({"squares", "joins"}));
    d.bind(jd, [args, &opts] {
        auto in = load_graph(args->file);
        Report r = make("racg jdecomp", args->file, in.text);
        r.parameters["seed"] = args->seed;
        if (opts.seed_cap > 0 && in.graph.vertex_count() > opts.seed_cap)
            throw PreconditionError("defining graph exceeds the seed cap of " + std::to_string(opts.seed_cap) +
                                    " vertices");
        const auto dec = racg::j_infinity(in.graph, args->seed == "squares" ? racg::Seed::SQUARES : racg::Seed::LARGE_JOINS);
        json trace = json::array();
        for (const auto& stage : dec.trace) trace.push_back(sets_json(in.graph, stage));
        r.add("members", sets_json(in.graph, dec.members), trace);
        r.add("stages", static_cast<int>(dec.trace.size()));
        const auto chk = racg::check_decomposition(in.graph, dec.members);
        r.verdict("decomposition", chk.valid);
        if (!chk.valid) r.notes.push_back(chk.failure);
        return r;
    });

    auto* rh = racg_cmd->add_subcommand("relhyp", "Relative hyperbolicity verdict");
    rh->add_option("file", args->file, "Defining graph file")->required();
    d.bind(rh, [args, &opts] {
        auto in = load_graph(args->file);
        Report r = make("racg relhyp", args->file, in.text);
        if (opts.seed_cap > 0 && in.graph.vertex_count() > opts.seed_cap)
            throw PreconditionError("defining graph exceeds the seed cap of " + std::to_string(opts.seed_cap) +
                                    " vertices");
        const auto rep = racg::relhyp_report(in.graph);
        json trace = json::array();
        for (const auto& stage : rep.decomposition.trace) trace.push_back(sets_json(in.graph, stage));
        r.add("relatively_hyperbolic", rep.relatively_hyperbolic);
        r.add("peripherals", sets_json(in.graph, rep.peripherals), trace);
        return r;
    });
}

json relator_list(const sc::Alphabet& a, const std::vector<sc::Relator>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(sc::format_relator(a, r));
    return out;
}

sc::Family load_family(const std::string& text) {
    const auto p = sc::parse_presentation(text);
    std::vector<sc::Relator> rs;
    for (const auto& e : sc::expand_family(p)) rs.push_back(e.relator);
    return sc::symmetrize(p.alphabet, rs);
}

json piece_json(const sc::Family& f, const sc::Piece& p) {
    json out = json::object();
    out["piece"] = sc::format_piece(f.alphabet, p);
    out["length"] = p.length;
    out["first"] = sc::format_relator(f.alphabet, f.members[static_cast<std::size_t>(p.first)]);
    out["second"] = sc::format_relator(f.alphabet, f.members[static_cast<std::size_t>(p.second)]);
    out["relator_length"] = f.members[static_cast<std::size_t>(p.ratio_member)].size();
    out["ratio"] = sc::format_rational(p.ratio);
    return out;
}

void register_sc(CLI::App& app, Dispatch& d) {
    auto* sc_cmd = app.add_subcommand("sc", "Small cancellation for presentations");
    sc_cmd->require_subcommand(1);
    struct Args {
        std::string file, lambda = "1/4";
        int t = 4;
    };
    auto args = std::make_shared<Args>();

    auto* check = sc_cmd->add_subcommand("check", "C'(lambda) and T(q) verdicts");
    check->add_option("file", args->file, "Presentation file")->required();
    check->add_option("--lambda", args->lambda, "Rational in (0,1), e.g. 1/4");
    check->add_option("--t", args->t, "q of the T(q) condition")->check(CLI::Range(3, 1000));
    d.bind(check, [args] {
        const std::string text = io::read_file(args->file);
        Report r = make("sc check", args->file, text);
        const auto lambda = sc::parse_rational(args->lambda);
        r.parameters["lambda"] = sc::format_rational(lambda);
        r.parameters["t"] = args->t;
        const auto f = load_family(text);
        const auto v = sc::check_small_cancellation(f, lambda, args->t);
        r.verdict("Cprime", v.cprime.pass);
        r.verdict("T", v.t.pass);
        r.add("members", static_cast<int>(f.members.size()), relator_list(f.alphabet, f.input));
        r.add("max_piece_ratio", sc::format_rational(v.cprime.max_ratio),
              v.cprime.witness ? piece_json(f, *v.cprime.witness) : json(nullptr));
        json tw = nullptr;
        if (!v.t.pass) {
            tw = json::object();
            const auto& pool = f.alphabet.free_product ? f.input : f.members;
            json cyc = json::array();
            for (int i : v.t.cycle) cyc.push_back(sc::format_relator(f.alphabet, pool[static_cast<std::size_t>(i)]));
            tw["relators"] = cyc;
            if (v.t.letters) {
                json ls = json::array();
                for (const auto& s : *v.t.letters) ls.push_back(sc::format_syllable(f.alphabet, s));
                tw["letters"] = ls;
            }
        }
        r.add("T", v.t.pass, tw);
        r.notes = v.notes;
        return r;
    });

    auto* pcs = sc_cmd->add_subcommand("pieces", "Pieces of the symmetrized family");
    pcs->add_option("file", args->file, "Presentation file")->required();
    d.bind(pcs, [args] {
        const std::string text = io::read_file(args->file);
        Report r = make("sc pieces", args->file, text);
        const auto f = load_family(text);
        const auto ps = sc::pieces(f);
        json list = json::array();
        int longest = 0;
        for (const auto& p : ps) {
            list.push_back(piece_json(f, p));
            longest = std::max(longest, p.length);
        }
        r.add("piece_count", static_cast<int>(ps.size()), list);
        r.add("longest_piece", longest);
        return r;
    });

    auto* exp = sc_cmd->add_subcommand("expand", "Expand parametric relators");
    exp->add_option("file", args->file, "Presentation file")->required();
    d.bind(exp, [args] {
        const std::string text = io::read_file(args->file);
        Report r = make("sc expand", args->file, text);
        const auto p = sc::parse_presentation(text);
        json list = json::array();
        const auto ex = sc::expand_family(p);
        for (const auto& e : ex) {
            json row = json::object();
            row["template"] = p.relators[e.template_index].text;
            if (!p.param.empty()) row[p.param] = e.index;
            row["relator"] = sc::format_relator(p.alphabet, e.relator);
            row["length"] = e.relator.size();
            list.push_back(row);
        }
        r.add("relators", static_cast<int>(ex.size()), list);
        return r;
    });
}

}  // namespace

void register_algebra_commands(CLI::App& app, Dispatch& d) {
    register_racg(app, d);
    register_sc(app, d);
}

}  // namespace cli
