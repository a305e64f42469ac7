#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubical/diag.hpp"
#include "cubical/median.hpp"

namespace cubical {

enum class ConeKind { CLIQUE, APEX };

struct FamilyMember {
    std::string name;
    Bitset vertices;
};

struct AddedEdge {
    VertexId u = -1, v = -1;  // u < v, base vertices
    int member = -1;          // first member containing both
};

// Base vertices keep their ids; APEX kind appends one apex per member, apex of
// member i having id base_vertex_count + i.
struct ConeOffGraph {
    ConeKind kind = ConeKind::CLIQUE;
    int base_vertex_count = 0;
    Graph graph;
    DistanceMatrix dist;
    std::vector<std::string> members;
    std::vector<AddedEdge> added_edges;  // CLIQUE kind only
    VertexId apex(int member) const { return base_vertex_count + member; }
};

// Throws PreconditionError naming the member and violating geodesic when a
// member is empty or not convex.
ConeOffGraph cone_off(const MedianGraph& g, const std::vector<FamilyMember>& family, ConeKind kind);

struct SandwichCheck {
    bool holds = true;
    VertexId x = -1, y = -1;  // first violating pair
    int clique = 0, apex = 0;
    long pairs_checked = 0;
};

// dist_CLIQUE <= dist_APEX <= 2 dist_CLIQUE on base pairs. Every pair when
// `samples` is 0, otherwise that many seeded random pairs.
SandwichCheck check_sandwich(const ConeOffGraph& clique, const ConeOffGraph& apex, long samples = 0,
                             unsigned long seed = 1);

struct ContractingReport {
    int n = 1;
    std::vector<bool> contracting;           // per hyperplane
    std::vector<std::optional<Grid>> grid;   // an (n, n)-grid through it, when found
    bool lower_bound = false;                // some grid search hit its cap
    ConeOffGraph gamma;                      // clique cone-off over non-contracting carriers
};

// J is n-contracting iff dim J < n and J lies in no (n, n)-grid.
ContractingReport contracting(const MedianGraph& g, int n, long cap = kDefaultGridCap);

struct RectangleDiameterCheck {
    int thickness = 0;         // rectangles with both sides >= thickness
    int diameter = 0;          // their largest diameter in the cone-off
    int bound = 0;
    bool holds = true;
};

// Every RamBound(n)-thick flat rectangle has diameter <= 4 RamBound(n) + 3 in
// the contracting graph.
RectangleDiameterCheck contracting_rectangle_check(const MedianGraph& g, const ContractingReport& report);

struct FinenessCertificate {
    int multiplicity = 0;             // max members containing one base edge
    EdgeId multiplicity_edge = -1;
    int max_common_crossings = 0;     // C: max hyperplanes crossing two members
    int witness_a = -1, witness_b = -1;
    std::vector<int> common;          // hyperplanes crossing both witnesses
};

FinenessCertificate fineness_certificate(const MedianGraph& g, const std::vector<FamilyMember>& family);

struct CycleProbe {
    long count = 0;
    bool capped = false;
};

// Simple cycles of exactly `length` through the edge u-v, by DFS.
CycleProbe count_cycles_through(const Graph& g, VertexId u, VertexId v, int length, long cap = 1'000'000);

struct ConeBigonCheck {
    int thickness = 0;         // L
    int rectangle_diameter = 0;  // C: max cone-off diameter of L-thick rectangles
    int bigon_thinness = 0;    // base bigons measured in the cone-off
    int bound = 0;             // max(2L, C)
    bool holds = true;
};

// Base bigons against max(2L, C) for every L from 1 to one past the largest
// rectangle thickness.
std::vector<ConeBigonCheck> cone_bigon_checks(const MedianGraph& g, const ConeOffGraph& y, int max_vertices = 400);

const char* to_string(ConeKind kind);

}  // namespace cubical
