#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubical/median.hpp"

namespace cubical {

struct Grid {
    std::vector<int> verticals;
    std::vector<int> horizontals;
    int thinness() const {
        return static_cast<int>(std::min(verticals.size(), horizontals.size()));
    }
};

// Pairwise disjoint and consecutively separating, in the given order.
bool is_chain(const MedianGraph& g, const std::vector<int>& hs);
// Full re-check of the grid conditions; `why` receives the first failure.
bool is_grid(const MedianGraph& g, const Grid& grid, std::string* why = nullptr);

struct GridSearch {
    // Maximal (p, q) with p >= q, each with a witness.
    std::vector<std::pair<int, int>> pareto;
    std::vector<Grid> witnesses;
    int thinness = 0;
    bool lower_bound = false;  // node cap reached
    long nodes = 0;
};

inline constexpr long kDefaultGridCap = 2'000'000;

GridSearch max_grid(const MedianGraph& g, long cap = kDefaultGridCap);

// An (n, n)-grid having h among its verticals, if one exists. `capped` is set
// when the search stopped early.
std::optional<Grid> grid_through(const MedianGraph& g, int h, int n, long cap = kDefaultGridCap,
                                 bool* capped = nullptr);

struct FlatRectangle {
    int a = 0;
    int b = 0;
    std::vector<VertexId> embedding;  // vertex of (i, j) at i * (b + 1) + j
    VertexId at(int i, int j) const { return embedding[static_cast<std::size_t>(i * (b + 1) + j)]; }
    int thickness() const { return std::min(a, b); }
};

bool is_flat_rectangle(const Graph& g, const DistanceMatrix& d, const FlatRectangle& r);

// Rectangle with corner x0 whose sides run along geodesics to u and to w.
// Requires every hyperplane separating x0,u to cross every one separating x0,w.
FlatRectangle rectangle_from_corners(const MedianGraph& g, VertexId x0, VertexId u, VertexId w);

// Visits every corner triple (x0, u, w) spanning a flat rectangle with both
// sides >= min_side. Each rectangle with a fixed corner and fixed opposite
// side endpoints is reported once.
void for_each_rectangle_corner(const MedianGraph& g, int min_side,
                               const std::function<void(VertexId, VertexId, VertexId)>& visit);

struct RectangleSearch {
    int thickness = 0;
    std::optional<FlatRectangle> witness;
};

RectangleSearch max_thick_rectangle(const MedianGraph& g);

// The e_p construction: n-cube vertices (e_{floor(n/2)}(i), e_{n-floor(n/2)}(j))
// where e_p(i) is i ones followed by p - i zeros.
FlatRectangle hypercube_rectangle(const Graph& cube, int n);

// Largest measure-distance between two vertices lying in a common flat
// rectangle whose sides are both >= min_side; 0 when there is none.
int max_rectangle_diameter(const MedianGraph& g, const DistanceMatrix& measure, int min_side);

struct DeltaOptions {
    int max_vertices = 256;
    bool sample = false;
    long samples = 2'000'000;
    unsigned long seed = 1;
};

struct DeltaResult {
    int twice_delta = 0;  // four-point defect; delta = twice_delta / 2
    std::array<VertexId, 4> witness{-1, -1, -1, -1};
    bool lower_bound = false;
    double value() const { return twice_delta / 2.0; }
};

DeltaResult delta(const DistanceMatrix& d, const DeltaOptions& options = {});
DeltaResult delta(const MedianGraph& g, Metric metric, const DeltaOptions& options = {});

struct BigonResult {
    int thinness = 0;
    VertexId x = -1, y = -1;
    VertexId far = -1;                     // vertex of the first geodesic
    std::vector<VertexId> first, second;  // both geodesics x -> y
};

// Largest Hausdorff distance, under `measure`, between two geodesics of
// `geo_graph` sharing their endpoints. `measure` must index the same vertices.
BigonResult bigon_thinness(const Graph& geo_graph, const DistanceMatrix& geo, const DistanceMatrix& measure,
                           int max_vertices = 400);
// Combinatorial bigons measured in the chosen metric.
BigonResult bigon_thinness(const MedianGraph& g, Metric metric, int max_vertices = 400);

// Hausdorff distance between two vertex sequences under `d`.
int hausdorff(const DistanceMatrix& d, const std::vector<VertexId>& a, const std::vector<VertexId>& b);

}  // namespace cubical
