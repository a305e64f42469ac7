#include "cubical/generators.hpp"

#include <stdexcept>
#include <string>

namespace cubical::gen {

Graph path(int edges) {
    Graph g;
    for (int i = 0; i <= edges; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

std::string grid_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Graph grid(int a, int b) {
    Graph g;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) g.add_vertex(grid_name(i, j));
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            if (i < a) g.add_edge(grid_name(i, j), grid_name(i + 1, j));
            if (j < b) g.add_edge(grid_name(i, j), grid_name(i, j + 1));
        }
    return g;
}

std::string cube_name(std::uint32_t mask, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Graph hypercube(int n) {
    if (n < 0 || n > 16) throw std::invalid_argument("hypercube dimension out of range");
    Graph g;
    const std::uint32_t count = 1u << n;
    for (std::uint32_t m = 0; m < count; ++m) g.add_vertex(cube_name(m, n));
    for (std::uint32_t m = 0; m < count; ++m)
        for (int i = 0; i < n; ++i)
            if (!(m & (1u << i))) g.add_edge(static_cast<VertexId>(m), static_cast<VertexId>(m | (1u << i)));
    return g;
}

Graph complete_bipartite(int m, int n) {
    Graph g;
    for (int i = 0; i < m; ++i) g.add_vertex("a" + std::to_string(i));
    for (int j = 0; j < n; ++j) g.add_vertex("b" + std::to_string(j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph complete(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    Graph out;
    const int ng = g.vertex_count(), nh = h.vertex_count();
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) out.add_vertex("(" + g.name(a) + "," + h.name(b) + ")");
    auto id = [nh](int a, int b) { return a * nh + b; };
    for (int a = 0; a < ng; ++a)
        for (const Edge& e : h.edges()) out.add_edge(id(a, e.u), id(a, e.v));
    for (const Edge& e : g.edges())
        for (int b = 0; b < nh; ++b) out.add_edge(id(e.u, b), id(e.v, b));
    return out;
}

Graph tree_from_parents(const std::vector<int>& parent) {
    Graph g;
    for (std::size_t i = 0; i < parent.size(); ++i) g.add_vertex("t" + std::to_string(i));
    for (std::size_t i = 1; i < parent.size(); ++i) {
        if (parent[i] < 0 || static_cast<std::size_t>(parent[i]) >= i) throw std::invalid_argument("bad parent index");
        g.add_edge(static_cast<VertexId>(i), parent[i]);
    }
    return g;
}

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) parent[static_cast<std::size_t>(i)] = std::uniform_int_distribution<int>(0, i - 1)(rng);
    return tree_from_parents(parent);
}

}  // namespace cubical::gen
