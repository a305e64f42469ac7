#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cubical/graph.hpp"
#include "cubical/median.hpp"
#include "report.hpp"

namespace cli {

struct Options {
    bool json = false;
    // Size limit for exhaustive scans seeded by subsets or vertex pairs: the
    // large-join subset scan, all-pairs delta/bigon scans, polygon families.
    long seed_cap = 0;  // 0 keeps each scan's own default
};

using Action = std::function<Report()>;

// Leaf commands store their action here; main runs it after parsing.
struct Dispatch {
    Options options;
    Action action;
    void bind(CLI::App* leaf, Action a);
};

struct Anchor {
    std::string command;
    std::string statement;
};

const std::vector<Anchor>& anchor_manifest();
std::vector<std::string> anchors_for(const std::string& command);

void register_graph_commands(CLI::App& app, Dispatch& d);    // median, diag, coneoff
void register_algebra_commands(CLI::App& app, Dispatch& d);  // racg, sc
void register_poly_commands(CLI::App& app, Dispatch& d);     // poly

// Shared input helpers.
struct GraphInput {
    std::string text;
    cubical::Graph graph;
};
GraphInput load_graph(const std::string& path);
cubical::VertexId vertex_arg(const cubical::Graph& g, const std::string& name);
json names(const cubical::Graph& g, const std::vector<cubical::VertexId>& vs);
json names(const cubical::Graph& g, const cubical::Bitset& s);

}  // namespace cli
