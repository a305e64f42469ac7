#pragma once

#include <string>
#include <vector>

#include "cubical/graph.hpp"

namespace fixtures {

struct Named {
    std::string name;
    cubical::Graph graph;
};

// Deterministic family of median graphs: trees, grids, hypercubes up to
// dimension 5 and products of these, each with at most `max_vertices`.
std::vector<Named> median_family(int max_vertices = 200);

// Small members of the family (for the exhaustive oracles).
std::vector<Named> small_median_family(int max_vertices);

// Parse graph text (mediancore format); throws on error.
cubical::Graph graph_from_text(const std::string& text);

}  // namespace fixtures
