#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubical/common.hpp"
#include "cubical/graph.hpp"

namespace cubical {

enum class Metric { L1, LINF };

struct MedianVerdict {
    bool median = true;
    // A triple with zero or at least two medians, when `median` is false.
    std::optional<std::array<VertexId, 3>> witness;
    int witness_median_count = 0;
};

// Exhaustive triple scan. Throws PreconditionError on disconnected input.
MedianVerdict is_median(const Graph& g);
MedianVerdict is_median(const Graph& g, const DistanceMatrix& d);

// Vertices m with d(x,m)+d(m,y)=d(x,y) and the two symmetric identities.
std::vector<VertexId> medians_of(const DistanceMatrix& d, VertexId x, VertexId y, VertexId z);

struct ConvexityVerdict {
    bool convex = true;
    VertexId a = -1, b = -1;  // endpoints inside the set
    VertexId outside = -1;    // vertex off the set on a geodesic a -> b
    std::vector<VertexId> geodesic;  // a ... outside ... b
};

// Interval closure test; throws PreconditionError on an empty set.
ConvexityVerdict is_convex(const Graph& g, const DistanceMatrix& d, const Bitset& s);

struct Hyperplane {
    int id = 0;
    std::vector<EdgeId> dual_edges;
    Bitset halfspace_a;  // contains the smaller endpoint of the first dual edge
    Bitset halfspace_b;
    int dimension = 1;   // max dimension of an inventory cube crossed by it
};

struct Cube {
    int dim = 0;
    std::vector<VertexId> vertices;    // sorted, 2^dim entries
    std::vector<int> crossing;         // sorted hyperplane ids, dim entries
};

struct ChainWitness {
    int length = 0;
    std::vector<int> hyperplanes;  // ordered from x towards y
};

// Binomial(2d, d): explicit upper bound for the Ramsey number used when
// extracting pairwise transverse or pairwise disjoint subfamilies.
std::uint64_t ram_bound(int d);

class MedianGraph {
public:
    struct Options {
        bool verify_median = true;
        bool verify_halfspace_convexity = true;
    };

    explicit MedianGraph(Graph g);
    MedianGraph(Graph g, Options options);

    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    const DistanceMatrix& distances() const { return dist_; }

    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& hyperplane(int h) const { return hyperplanes_[static_cast<std::size_t>(h)]; }
    int hyperplane_count() const { return static_cast<int>(hyperplanes_.size()); }
    int hyperplane_of_edge(EdgeId e) const { return edge_class_[static_cast<std::size_t>(e)]; }
    int hyperplane_between(VertexId u, VertexId v) const;

    bool transverse(int h, int k) const { return transverse_[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)]; }
    const Bitset& transverse_set(int h) const { return transverse_[static_cast<std::size_t>(h)]; }
    // Quarter-space test, independent of the cached relation.
    bool quarter_spaces_nonempty(int h, int k) const;

    // 0 when v lies in halfspace_a, 1 otherwise.
    int side(int h, VertexId v) const { return hyperplanes_[static_cast<std::size_t>(h)].halfspace_a[static_cast<std::size_t>(v)] ? 0 : 1; }
    const Bitset& halfspace(int h, int which) const;
    bool separates(int h, VertexId x, VertexId y) const { return side(h, x) != side(h, y); }
    std::vector<int> separating(VertexId x, VertexId y) const;
    // Both halfspaces of h meet s.
    bool crosses(int h, const Bitset& s) const;
    // For disjoint h != k: the side of h containing the carrier of k.
    int side_of(int h, int k) const;
    // h separates k and l (all three pairwise distinct, k and l disjoint from h).
    bool separates_hyperplanes(int h, int k, int l) const;
    // Endpoints of the dual edges of h.
    Bitset carrier_vertices(int h) const;

    // Neighbor of v across h, if v is adjacent to h.
    std::optional<VertexId> flip(VertexId v, int h) const;
    // Hyperplanes dual to edges at v.
    std::vector<int> hyperplanes_at(VertexId v) const;

    VertexId median(VertexId x, VertexId y, VertexId z) const;

    const std::vector<Cube>& maximal_cubes() const { return cubes_; }
    int dimension() const;

    int dist(Metric metric, VertexId x, VertexId y) const;
    // Longest chain of pairwise disjoint hyperplanes separating x and y.
    ChainWitness disjoint_chain(VertexId x, VertexId y) const;
    // Graph with an edge between any two vertices of a common cube.
    const Graph& cube_coneoff() const { return coneoff_; }
    const DistanceMatrix& linf_distances() const { return linf_; }

    std::string describe_vertex_set(const Bitset& s) const;

private:
    void build_hyperplanes();
    void build_transversality();
    void build_cubes();

    Graph graph_;
    DistanceMatrix dist_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<int> edge_class_;
    std::vector<Bitset> transverse_;
    std::vector<std::vector<std::pair<int, VertexId>>> flips_;  // sorted by hyperplane
    std::vector<Cube> cubes_;
    Graph coneoff_;
    DistanceMatrix linf_;
};

struct Projection {
    VertexId image = -1;
    int distance = 0;
};

// Gate of x in the convex set c. Throws PreconditionError when the nearest
// vertex is not unique (c not convex) or when the separation property fails.
Projection project(const MedianGraph& g, const Bitset& c, VertexId x);

struct SetProjection {
    Bitset image;
    std::vector<int> crossing_image;  // hyperplanes crossing p(s2)
    std::vector<int> crossing_both;   // hyperplanes crossing both c and s2
};

SetProjection project(const MedianGraph& g, const Bitset& c, const Bitset& s2);

// Largest subfamily of `ids` that is pairwise disjoint / pairwise transverse.
std::vector<int> max_pairwise_disjoint(const MedianGraph& g, const std::vector<int>& ids);
std::vector<int> max_pairwise_transverse(const MedianGraph& g, const std::vector<int>& ids);

Bitset vertex_set(const Graph& g, const std::vector<VertexId>& vs);
std::vector<VertexId> members(const Bitset& s);

}  // namespace cubical
