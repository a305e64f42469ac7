#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cubical {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u;  // u < v
    VertexId v;
};

// Simple undirected graph with opaque string names and dense internal ids.
// Vertex ids follow insertion order; neighbor lists are kept sorted.
class Graph {
public:
    VertexId add_vertex(std::string name);
    // Returns the existing id when the name is already present.
    VertexId ensure_vertex(const std::string& name);
    EdgeId add_edge(VertexId a, VertexId b);
    EdgeId add_edge(const std::string& a, const std::string& b);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& name(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VertexId> find(std::string_view name) const;
    VertexId at(std::string_view name) const;  // throws InputError when absent

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const { return edge_between(a, b).has_value(); }

    bool is_connected() const;
    // Induced subgraph on `keep` (in the given order).
    Graph induced(const std::vector<VertexId>& keep) const;

private:
    static std::uint64_t key(VertexId a, VertexId b);

    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

inline constexpr int kUnreachable = -1;

// All-pairs BFS distances, row-major.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g);

    int size() const { return n_; }
    int operator()(VertexId a, VertexId b) const {
        return d_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    }
    int diameter() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

std::vector<int> bfs_distances(const Graph& g, VertexId source);

// Vertices of one geodesic from a to b (inclusive), greedy on the distance table.
std::vector<VertexId> geodesic_path(const Graph& g, const DistanceMatrix& d, VertexId a, VertexId b);

}  // namespace cubical
