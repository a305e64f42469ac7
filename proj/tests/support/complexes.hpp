#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

// Builds complex text from vertex cycles; edges are created on first use and
// shared by later polygons through the same vertex pair.
class ComplexBuilder {
public:
    int vertex();
    void edge(int a, int b);
    void polygon(const std::vector<int>& cycle);
    std::string text() const;

private:
    int edge_name(int a, int b, bool& forward);

    int vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::string>> polygons_;
};

std::string single_polygon(int sides);
std::string isolated_edge();
std::string polygon_with_isolated_edge(int sides);
// `count` polygons in a row, polygon i+1 glued to side `stride` of polygon i
// (2 <= stride <= sides - 2).
std::string polygon_chain(int count, int sides, int stride);
// `count` polygons around a central vertex, consecutive ones sharing a spoke.
std::string flower(int count, int sides);

struct NamedComplex {
    std::string name;
    std::string text;
};

// Complexes satisfying C'(1/4) and T(4).
std::vector<NamedComplex> sc_complexes();

}  // namespace fixtures
