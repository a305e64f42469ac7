#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubical/graph.hpp"

// Slow reference computations used to cross-check the library. They share
// only the Graph container with it; every relation is recomputed from
// adjacency and distances.
namespace oracle {

using Matrix = std::vector<std::vector<int>>;

// Floyd-Warshall; -1 for unreachable pairs.
Matrix floyd(const cubical::Graph& g);

// Vertices m on a geodesic between every pair of x, y, z.
int median_count(const Matrix& d, int x, int y, int z);
// Every triple has exactly one median.
bool all_triples_unique_median(const Matrix& d);

// Djokovic-Winkler classes: edges uv, xy related when
// d(u,x) + d(v,y) != d(u,y) + d(v,x); transitive closure by union-find.
struct ThetaClass {
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> side_u;  // {w : d(w,u) < d(w,v)} for the first edge uv
};

std::vector<ThetaClass> theta_classes(const cubical::Graph& g, const Matrix& d);

// All four quarter spaces nonempty.
bool transverse(const ThetaClass& a, const ThetaClass& b);

// Largest (p, q) Pareto front of grids, by enumerating every subset of
// classes that forms a chain. Requires at most 16 classes.
struct GridFront {
    int thinness = 0;
    std::vector<std::pair<int, int>> pareto;  // p >= q, maximal
};

GridFront brute_grid(const cubical::Graph& g, const Matrix& d);

// Largest L such that the L x L grid embeds isometrically, by backtracking
// over all embeddings.
int brute_rectangle_thickness(const cubical::Graph& g, const Matrix& d);

// Every geodesic from a to b, as vertex lists.
std::vector<std::vector<int>> all_geodesics(const cubical::Graph& g, const Matrix& d, int a, int b);

// Largest Hausdorff distance under `measure` between two geodesics with
// common endpoints.
int brute_bigon(const cubical::Graph& g, const Matrix& d, const Matrix& measure);

// Four-point defect 2*delta over all quadruples.
int brute_twice_delta(const Matrix& d);

// Graph with an edge between any two vertices in a common cube, computed as
// pairs whose interval induces a hypercube.
Matrix brute_linf(const cubical::Graph& g, const Matrix& d);

// Simple cycles of exactly `length` through edge u-v, enumerating vertex
// sequences v = w1, ..., w_{length-1} = u without reusing a vertex.
long brute_cycles_through(const cubical::Graph& g, int u, int v, int length);

// Right-angled Coxeter word problem by the deletion rule: a letter s can be
// cancelled with a later s when every letter between commutes with s.
std::vector<int> coxeter_reduce(const cubical::Graph& gamma, std::vector<int> word);
bool coxeter_equal(const cubical::Graph& gamma, const std::vector<int>& u, const std::vector<int>& v);

// Induced 4-cycles of a small graph, by scanning all 4-subsets.
std::vector<std::vector<int>> brute_induced_squares(const cubical::Graph& gamma);

}  // namespace oracle
