#include "fixtures.hpp"

#include <random>

#include "cubical/generators.hpp"
#include "cubical/io.hpp"

namespace fixtures {

using namespace cubical;

std::vector<Named> median_family(int max_vertices) {
    std::vector<Named> out;
    auto add = [&](std::string name, Graph g) {
        if (g.vertex_count() <= max_vertices) out.push_back(Named{std::move(name), std::move(g)});
    };
    std::mt19937_64 rng(20240611);
    for (int n = 1; n <= 5; ++n) add("cube" + std::to_string(n), gen::hypercube(n));
    for (int e : {1, 4, 9}) add("path" + std::to_string(e), gen::path(e));
    for (int n : {6, 12, 25, 60, 120, 200}) add("tree" + std::to_string(n), gen::random_tree(n, rng));
    for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 4}, {5, 4}, {6, 3}, {9, 9}, {12, 13}})
        add("grid" + std::to_string(a) + "x" + std::to_string(b), gen::grid(a, b));
    add("grid2x2x2", gen::cartesian_product(gen::grid(2, 2), gen::path(2)));
    add("grid3x3x2", gen::cartesian_product(gen::grid(3, 3), gen::path(2)));
    add("grid4x4x4", gen::cartesian_product(gen::grid(4, 4), gen::path(4)));
    for (int i = 0; i < 8; ++i) {
        const int a = 3 + i, b = 4 + (i * 5) % 9;
        add("tree" + std::to_string(a) + "xtree" + std::to_string(b),
            gen::cartesian_product(gen::random_tree(a, rng), gen::random_tree(b, rng)));
    }
    for (int i = 0; i < 4; ++i) {
        const int a = 5 + 3 * i;
        add("tree" + std::to_string(a) + "xcube2", gen::cartesian_product(gen::random_tree(a, rng), gen::hypercube(2)));
    }
    add("tree8xcube3", gen::cartesian_product(gen::random_tree(8, rng), gen::hypercube(3)));
    add("tree5xcube4", gen::cartesian_product(gen::random_tree(5, rng), gen::hypercube(4)));
    add("cube3xpath3", gen::cartesian_product(gen::hypercube(3), gen::path(3)));
    add("tree4xtree4xtree4", gen::cartesian_product(gen::cartesian_product(gen::random_tree(4, rng), gen::random_tree(4, rng)),
                                                    gen::random_tree(4, rng)));
    add("star6xstar6", gen::cartesian_product(gen::tree_from_parents({0, 0, 0, 0, 0, 0}),
                                               gen::tree_from_parents({0, 0, 0, 0, 0, 0})));
    add("tree6xpath5", gen::cartesian_product(gen::random_tree(6, rng), gen::path(5)));
    add("tree10xtree10", gen::cartesian_product(gen::random_tree(10, rng), gen::random_tree(10, rng)));
    add("tree14xtree14", gen::cartesian_product(gen::random_tree(14, rng), gen::random_tree(14, rng)));
    add("tree7xgrid2x3", gen::cartesian_product(gen::random_tree(7, rng), gen::grid(2, 3)));
    add("path2xcube4", gen::cartesian_product(gen::path(2), gen::hypercube(4)));
    add("grid7x5", gen::grid(7, 5));
    return out;
}

std::vector<Named> small_median_family(int max_vertices) { return median_family(max_vertices); }

Graph graph_from_text(const std::string& text) { return io::parse_graph(text); }

}  // namespace fixtures
