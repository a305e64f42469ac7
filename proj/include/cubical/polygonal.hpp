#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/median.hpp"
#include "cubical/smallcancel.hpp"

namespace cubical::poly {

using sc::Rational;

// Complex text as read, before any structural check. Parsing only rejects
// malformed lines; references are resolved by validate_complex.
struct RawComplex {
    struct RawVertex {
        std::string name;
        std::size_t line = 0;
    };
    struct RawEdge {
        std::string name, a, b;
        std::size_t line = 0;
    };
    struct RawSide {
        std::string edge;
        bool forward = true;
        std::size_t column = 0;
    };
    struct RawPolygon {
        std::string name;
        std::vector<RawSide> sides;
        std::size_t line = 0;
    };
    std::vector<RawVertex> vertices;
    std::vector<RawEdge> edges;
    std::vector<RawPolygon> polygons;
};

// `vertex v`, `edge e v1 v2`, `polygon P : +e1 -e2 ...` (a bare edge name
// means `+`). Throws InputError with line and column.
RawComplex parse_complex(std::string_view text);

struct PolyEdge {
    std::string name;
    VertexId a = -1, b = -1;     // tail, head
    std::vector<int> polygons;   // polygons whose boundary uses the edge
};

struct Side {
    EdgeId edge = -1;
    bool forward = true;
};

struct Polygon {
    std::string name;
    std::vector<Side> sides;
    // boundary[i] is the tail of sides[i] as traversed; all distinct.
    std::vector<VertexId> boundary;
    int length() const { return static_cast<int>(sides.size()); }
};

struct LinkCorner {
    int polygon = -1;
    int position = -1;  // boundary index of the corner vertex
    EdgeId in = -1, out = -1;
};

// One node per edge at the vertex, one link edge per polygon corner.
struct VertexLink {
    std::vector<EdgeId> nodes;
    std::vector<LinkCorner> corners;
};

struct PolygonalComplex {
    std::vector<std::string> vertex_names;
    std::vector<PolyEdge> edges;
    std::vector<Polygon> polygons;
    std::vector<VertexLink> links;  // per vertex

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int polygon_count() const { return static_cast<int>(polygons.size()); }
    bool isolated(EdgeId e) const { return edges[static_cast<std::size_t>(e)].polygons.empty(); }
    VertexId vertex(std::string_view name) const;  // throws InputError
    EdgeId edge(std::string_view name) const;
    int polygon(std::string_view name) const;
    Bitset polygon_vertices(int p) const;
    // Vertices and edges, as the graph of the 1-skeleton (parallel edges kept
    // by edge id, so this is only an adjacency list).
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency() const;
};

// Every polygon even with at least 4 sides, chained head to tail, with pairwise
// distinct boundary vertices; no dangling references, loops, duplicate names
// or two polygons on one boundary; the 1-skeleton is connected. Throws
// InputError naming the offending line.
PolygonalComplex validate_complex(const RawComplex& raw);
PolygonalComplex load_complex(std::string_view text);
std::string write_complex(const PolygonalComplex& x);

// Maximal run of edges shared by two distinct polygons, located on both.
struct PolyPiece {
    int first = -1, second = -1;
    int first_start = 0;   // boundary index in `first`
    int second_start = 0;  // boundary index in `second` of the same run
    bool second_reversed = false;
    std::vector<EdgeId> edges;  // in the order of `first`
    int length() const { return static_cast<int>(edges.size()); }
};

// Each unordered polygon pair once, first < second.
std::vector<PolyPiece> pieces(const PolygonalComplex& x);

struct LinkCycle {
    VertexId vertex = -1;
    std::vector<EdgeId> nodes;     // link nodes around the cycle
    std::vector<int> polygons;     // polygon of the corner after each node
    int length() const { return static_cast<int>(nodes.size()); }
};

// Shortest cycle of length >= 3 in the vertex link (2-cycles are ignored).
std::optional<LinkCycle> shortest_link_cycle(const PolygonalComplex& x, VertexId v);

struct PieceCover {
    int polygon = -1;
    bool coverable = false;
    int pieces = 0;                 // minimum count, when coverable
    std::vector<PolyPiece> cover;   // re-oriented so `first` is the polygon
};

// Exact minimum number of pieces covering the boundary of p.
PieceCover min_piece_cover(const PolygonalComplex& x, int p, const std::vector<PolyPiece>& all);

struct PolySCVerdict {
    bool cprime = true;
    Rational max_ratio{0};
    std::optional<PolyPiece> cprime_witness;
    int cprime_polygon = -1;         // polygon realising max_ratio
    bool c = true;
    int min_cover = -1;              // smallest cover over coverable polygons, -1 if none
    std::optional<PieceCover> c_witness;
    bool t = true;
    int link_girth = -1;             // shortest link cycle of length >= 3, -1 if none
    std::optional<LinkCycle> t_witness;
    int piece_count = 0;
};

PolySCVerdict polygonal_sc_check(const PolygonalComplex& x, const Rational& lambda, int n_c, int n_t);

struct Wall {
    int id = 0;
    std::vector<EdgeId> dual_edges;
    std::vector<Bitset> sides;       // vertex components after cutting
    std::vector<int> carrier;        // polygons using a dual edge
    bool two_sided() const { return sides.size() == 2; }
    // 0/1 for a vertex; only meaningful when two_sided().
    int side(VertexId v) const { return sides[0][static_cast<std::size_t>(v)] ? 0 : 1; }
};

struct WallSystem {
    std::vector<Wall> walls;
    std::vector<int> wall_of_edge;
    // Walls sharing a polygon (they cross at its center).
    std::vector<Bitset> crossing;
    bool all_two_sided() const;
};

WallSystem hypergraphs(const PolygonalComplex& x);

// Point of X: a vertex, the midpoint of an edge or the center of a polygon.
struct Point {
    enum Kind { VERTEX, EDGE_MIDPOINT, POLYGON_CENTER } kind = VERTEX;
    int id = -1;
};

std::string format_point(const PolygonalComplex& x, const Point& p);
// 0/1, or -1 when the point lies on the wall.
int point_side(const PolygonalComplex& x, const WallSystem& ws, int wall, const Point& p);
std::vector<int> separating_walls(const PolygonalComplex& x, const WallSystem& ws, const Point& a, const Point& b);
// Largest pairwise disjoint (non-crossing) subfamily.
std::vector<int> max_disjoint_walls(const WallSystem& ws, const std::vector<int>& walls);

struct CubeTag {
    enum Kind { EDGE_CUBE, CELL_CUBE, UNMATCHED } kind = UNMATCHED;
    int source = -1;  // isolated edge or polygon
};

struct DualCubeComplex {
    WallSystem walls;
    std::vector<Bitset> orientations;    // per dual vertex, bit w set = side 1 of wall w
    std::vector<VertexId> principal;     // per X vertex
    std::optional<MedianGraph> median;
    std::vector<int> wall_of_hyperplane;
    std::vector<int> hyperplane_of_wall;
    std::vector<CubeTag> tags;           // per maximal cube of `median`
    const MedianGraph& graph() const { return *median; }
};

// Flip closure of the principal orientations. Throws PreconditionError when a
// wall does not have exactly two sides, or when the result is not median or
// its hyperplanes do not match the walls one to one.
DualCubeComplex dual_cube_complex(const PolygonalComplex& x);

struct Classification {
    bool complete = true;                 // every maximal cube matched
    std::vector<int> unmatched;           // maximal cube indices
};

// Fills c.tags. A cell cube of P crosses exactly the walls of P and contains a
// principal vertex of P; an edge cube is the dual edge of an isolated edge.
Classification classify_maximal_cubes(const PolygonalComplex& x, DualCubeComplex& c);

// `label <u> <v> <wall>` for every dual edge.
std::string write_wall_labels(const DualCubeComplex& c);

struct ProjectionResult {
    Point point;
    std::vector<int> polygons;    // polygons of the maximal cubes at the vertex
    int edge_cube = -1;           // isolated edge, when that rule applied
    bool intersection_ok = true;  // false when the polygons have no common path
    std::string note;
};

ProjectionResult dual_projection(const PolygonalComplex& x, const DualCubeComplex& c, VertexId v);

struct TransferCheck {
    bool holds = true;
    long pairs_checked = 0;
    int max_r = 3;
    VertexId u = -1, w = -1;         // worst pair
    int dual_chain = 0;              // pairwise disjoint dual hyperplanes separating u, w
    int wall_chain = 0;              // pairwise disjoint walls separating p(u), p(w)
    std::vector<int> walls;          // witness chain
};

// For dual vertices u, w separated by R + 2 pairwise disjoint hyperplanes,
// p(u) and p(w) are separated by at least R pairwise disjoint walls, R <= max_r.
// All pairs when the dual has at most `all_pairs_limit` vertices, otherwise
// `samples` seeded random pairs.
TransferCheck separation_transfer(const PolygonalComplex& x, const DualCubeComplex& c, int max_r = 3,
                                  int all_pairs_limit = 400, long samples = 20000, unsigned long seed = 1);
TransferCheck separation_transfer_pair(const PolygonalComplex& x, const DualCubeComplex& c, VertexId u, VertexId w,
                                       int max_r = 3);

struct IntersectionCheck {
    bool holds = true;
    long families_checked = 0;
    std::vector<int> witness;  // pairwise intersecting, empty common intersection
};

// Every pairwise intersecting family of at most `max_size` polygons has a
// common vertex.
IntersectionCheck pairwise_intersection_check(const PolygonalComplex& x, int max_size = 5);

struct SeparationCheck {
    bool holds = true;
    long pairs_checked = 0;
    int p = -1, q = -1;  // disjoint polygons no wall separates
};

// Disjoint polygons are separated by some wall.
SeparationCheck polygon_separation_check(const PolygonalComplex& x, const WallSystem& ws);

const char* to_string(CubeTag::Kind kind);

}  // namespace cubical::poly
