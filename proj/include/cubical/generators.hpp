#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cubical/graph.hpp"

namespace cubical::gen {

Graph path(int edges);                      // vertices "0".."edges"
Graph cycle(int n);                         // vertices "0".."n-1"
Graph grid(int a, int b);                   // [0,a]x[0,b], vertices "(i,j)"
Graph hypercube(int n);                     // vertices are n-bit strings, bit i left to right
Graph complete_bipartite(int m, int n);     // parts "a0".. and "b0"..
Graph complete(int n);
Graph cartesian_product(const Graph& g, const Graph& h);  // vertices "(g,h)"
// Tree whose vertex i > 0 hangs from parent[i] < i.
Graph tree_from_parents(const std::vector<int>& parent);
Graph random_tree(int n, std::mt19937_64& rng);

// Name of grid vertex (i, j) and of a hypercube vertex given as a bitmask
// (bit i of `mask` is character i of the name).
std::string grid_name(int i, int j);
std::string cube_name(std::uint32_t mask, int n);

}  // namespace cubical::gen
