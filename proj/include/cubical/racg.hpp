#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/diag.hpp"
#include "cubical/median.hpp"

// Right-angled Coxeter groups given by a defining graph: generators are the
// vertices, each an involution, two generators commuting iff adjacent.
namespace cubical::racg {

using Word = std::vector<VertexId>;
using VertexSet = std::vector<VertexId>;  // sorted, duplicate-free

// Whitespace-separated generator names; "e" or an empty string is the
// identity. Unknown names raise InputError.
Word parse_word(const Graph& gamma, std::string_view text);
std::string format_word(const Graph& gamma, const Word& w, std::string_view sep = " ");

bool commute(const Graph& gamma, VertexId s, VertexId t);

// Reduced word with the least generator order among all reduced spellings.
Word normal_form(const Graph& gamma, const Word& w);
bool same_element(const Graph& gamma, const Word& u, const Word& v);

struct Ball {
    int radius = 0;
    std::vector<Word> elements;  // vertex i of `graph`, in BFS order
    Graph graph;                 // right multiplication by generators
    // Per edge of `graph`: hyperplane class computed in the ball of radius
    // radius + 2 and restricted here. Classes can still merge further out,
    // so these labels are approximate.
    std::vector<int> edge_labels;
    int label_count = 0;
    std::map<Word, VertexId> index;  // normal form -> vertex
};

// Throws PreconditionError when the ball of radius r + 2 exceeds `cap`.
Ball ball(const Graph& gamma, int r, long cap = 200'000);

// Vertex of `b` for the element, or -1 when outside the ball.
VertexId ball_vertex(const Graph& gamma, const Ball& b, const Word& w);

bool is_complete(const Graph& gamma, const VertexSet& s);
VertexSet link(const Graph& gamma, VertexId v);
VertexSet star(const Graph& gamma, VertexId v);

// Vertices lying on an induced 4-cycle.
VertexSet square_vertices(const Graph& gamma);
// Vertex sets of the induced 4-cycles, each sorted, in lexicographic order.
std::vector<VertexSet> induced_squares(const Graph& gamma);

// Induced subgraph on `s` is a join of two non-complete subgraphs.
bool is_large_join(const Graph& gamma, const VertexSet& s);
// Inclusion-maximal large joins, by exhaustive subset scan. Throws
// PreconditionError above `max_vertices`.
std::vector<VertexSet> maximal_large_joins(const Graph& gamma, int max_vertices = 16);

struct ContractingGenerators {
    std::vector<bool> contracting;              // per generator
    VertexSet squares;
    std::vector<VertexSet> star_peripherals;    // star(u) for u on an induced square
    std::vector<VertexSet> join_peripherals;    // maximal large joins
};

ContractingGenerators contracting_generators(const Graph& gamma);

// Adds every vertex whose link meets `lambda` in a non-complete set.
VertexSet cp(const Graph& gamma, const VertexSet& lambda);

enum class Seed { SQUARES, LARGE_JOINS };

struct JoinDecomposition {
    std::vector<VertexSet> members;              // sorted, duplicate-free
    std::vector<std::vector<VertexSet>> trace;   // every stage, seed first
};

// Merge members with non-complete intersections, cp the unions, repeat
// until the collection stops changing.
JoinDecomposition j_infinity(const Graph& gamma, Seed seed);

struct DecompositionCheck {
    bool valid = true;
    std::string failure;  // first violated condition, human readable
};

// The three join-decomposition conditions: every large join inside a
// member, pairwise complete intersections, link-closure.
DecompositionCheck check_decomposition(const Graph& gamma, const std::vector<VertexSet>& members);

struct RelHypReport {
    bool relatively_hyperbolic = false;
    std::vector<VertexSet> peripherals;
    JoinDecomposition decomposition;
};

RelHypReport relhyp_report(const Graph& gamma);

struct BallGridCheck {
    int radius = 0;
    int dimension = 0;           // of the hyperplane dual to the edge (e, u)
    std::vector<int> n_values;   // dimension < n <= max_n
    std::vector<bool> grid_found;
    bool capped = false;
};

// Searches the radius-r ball for (n, n)-grids through the hyperplane dual to
// the edge from the identity to u. For a contracting u none should exist.
BallGridCheck ball_grid_check(const Graph& gamma, VertexId u, int r, int max_n = 3, long cap = kDefaultGridCap);

std::string format_set(const Graph& gamma, const VertexSet& s);
const char* to_string(Seed seed);

}  // namespace cubical::racg
