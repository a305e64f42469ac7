#include <chrono>
#include <iostream>

#include "commands.hpp"
#include "cubical/common.hpp"
#include "cubical/io.hpp"

namespace cli {

void Dispatch::bind(CLI::App* leaf, Action a) {
    leaf->callback([this, a = std::move(a)] { action = a; });
}

const std::vector<Anchor>& anchor_manifest() {
    static const std::vector<Anchor> manifest{
        {"median check", "a connected graph is the 1-skeleton of a CAT(0) cube complex iff every triple has exactly one median"},
        {"median hyperplanes", "hyperplanes are classes of edges under square opposition; each cuts the graph into two convex halfspaces"},
        {"median dist", "the l1 distance counts separating hyperplanes; the l-infinity distance is the longest chain of pairwise disjoint separating hyperplanes"},
        {"median median", "the median of a triple is the unique vertex on geodesics between each pair"},
        {"median cubes", "maximal cubes are spanned by pairwise transverse hyperplanes adjacent at a vertex"},
        {"median convex", "a vertex set is convex iff it contains every geodesic between its members"},
        {"median project", "nearest-point projection onto a convex set is a gate; hyperplanes separating a vertex from its gate separate it from the set"},
        {"diag grid", "hyperbolic iff the thickness of grids of hyperplanes is bounded"},
        {"diag rectangle", "hyperbolic iff flat rectangles are uniformly thin; thinness bounds transfer between grids and rectangles"},
        {"diag delta", "four-point hyperbolicity constant of a finite metric"},
        {"diag bigon", "bigons in a hyperbolic median graph are uniformly thin, with explicit bounds in the grid thickness"},
        {"diag contracting", "a hyperplane is n-contracting when its dimension is below n and it lies in no (n,n)-grid; coning off the rest gives a hyperbolic graph with bounded rectangle diameter"},
        {"diag fineness", "a cone-off is fine when every edge lies in finitely many members and distinct members share boundedly many hyperplanes"},
        {"coneoff", "coning off a family of convex subcomplexes keeps bigons thin in the cone-off once thick rectangles have bounded cone-off diameter"},
        {"racg nf", "words in a right-angled Coxeter group are equal iff their reduced forms agree up to commuting letters"},
        {"racg ball", "balls of the Cayley graph are pieces of the Davis complex, a CAT(0) cube complex"},
        {"racg squares", "generators on induced squares of the defining graph are exactly the non-contracting ones"},
        {"racg contracting", "a generator is contracting iff it lies on no induced square"},
        {"racg jdecomp", "the minimal join decomposition is the fixed point of merging and link-closing, seeded by squares or large joins"},
        {"racg relhyp", "the group is relatively hyperbolic iff the minimal join decomposition is proper, with the members as peripheral subgroups"},
        {"sc check", "metric small cancellation C'(lambda) and the T(q) condition for relator families in free groups and free products"},
        {"sc pieces", "pieces are common prefixes of distinct members of the symmetrized family"},
        {"sc expand", "parametric relator families expand over a finite index set"},
        {"poly validate", "polygonal complexes with even, embedded polygons"},
        {"poly sc", "polygonal C'(lambda), C(n) and T(n): pieces are shared boundary paths, link cycles are long"},
        {"poly walls", "hypergraphs are classes of edges under polygon opposition and separate the complex in two"},
        {"poly dual", "cubulating the hypergraph wallspace gives a CAT(0) cube complex"},
        {"poly classify", "under C(4)-T(4) every maximal cube of the dual is an edge-cube or a cell-cube"},
        {"poly project", "under C'(1/4)-T(4) there is a projection from the dual back to the complex that keeps separation by disjoint walls up to an additive constant"},
    };
    return manifest;
}

std::vector<std::string> anchors_for(const std::string& command) {
    std::vector<std::string> out;
    for (const auto& a : anchor_manifest())
        if (a.command == command) out.push_back(a.statement);
    return out;
}

}  // namespace cli

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial tools for median graphs, cube complexes, Coxeter groups and small cancellation"};
    app.require_subcommand(1);
    cli::Dispatch dispatch;
    app.add_flag("--json", dispatch.options.json, "Emit the report as JSON");
    app.add_option("--seed-cap", dispatch.options.seed_cap,
                   "Size limit for exhaustive subset and pair scans (0 keeps the defaults)")
        ->check(CLI::NonNegativeNumber);
    app.set_version_flag("--version", [] {
        std::string out = "cubical 1.0\n";
        for (const auto& a : cli::anchor_manifest()) out += a.command + ": " + a.statement + "\n";
        return out;
    });
    cli::register_graph_commands(app, dispatch);
    cli::register_algebra_commands(app, dispatch);
    cli::register_poly_commands(app, dispatch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kInputError;
    }
    if (!dispatch.action) {
        std::cerr << "error: no command given\n";
        return cli::kInputError;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        cli::Report report = dispatch.action();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (dispatch.options.json) std::cout << cli::to_json(report, ms).dump(2) << '\n';
        else std::cout << cli::to_text(report, ms);
        return report.exit_code;
    } catch (const cubical::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
    } catch (const cubical::PreconditionError& e) {
        std::cerr << "input error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
    }
    return cli::kInputError;
}
