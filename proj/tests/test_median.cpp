#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cubical/generators.hpp"
#include "cubical/median.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cubical;

namespace {

std::set<std::string> names_of(const Graph& g, const std::vector<VertexId>& vs) {
    std::set<std::string> out;
    for (VertexId v : vs) out.insert(g.name(v));
    return out;
}

// Chord between vertices at distance two: a triangle glued to a pentagon.
Graph hexagon_with_chord() {
    Graph g = gen::cycle(6);
    g.add_edge("0", "2");
    return g;
}

}  // namespace

TEST(MedianRecognition, AgreesWithBruteForceOnSmallFamily) {
    for (const auto& f : fixtures::small_median_family(40)) {
        SCOPED_TRACE(f.name);
        EXPECT_TRUE(is_median(f.graph).median);
        EXPECT_TRUE(oracle::all_triples_unique_median(oracle::floyd(f.graph)));
    }
}

TEST(MedianRecognition, CompleteBipartiteK23HasTripleWithTwoMedians) {
    const Graph g = gen::complete_bipartite(2, 3);
    const auto v = is_median(g);
    ASSERT_FALSE(v.median);
    ASSERT_TRUE(v.witness.has_value());
    const auto& w = *v.witness;
    EXPECT_EQ(names_of(g, {w[0], w[1], w[2]}), (std::set<std::string>{"b0", "b1", "b2"}));
    EXPECT_EQ(v.witness_median_count, 2);
    EXPECT_EQ(oracle::median_count(oracle::floyd(g), w[0], w[1], w[2]), 2);
}

TEST(MedianRecognition, HexagonWithChordFailsWithValidWitness) {
    const Graph g = hexagon_with_chord();
    const auto v = is_median(g);
    ASSERT_FALSE(v.median);
    const auto& w = *v.witness;
    EXPECT_NE(oracle::median_count(oracle::floyd(g), w[0], w[1], w[2]), 1);
    EXPECT_EQ(oracle::median_count(oracle::floyd(g), w[0], w[1], w[2]), v.witness_median_count);
}

TEST(MedianRecognition, HexagonWithLongChordIsTwoSquares) {
    Graph g = gen::cycle(6);
    g.add_edge("0", "3");
    EXPECT_TRUE(is_median(g).median);
}

TEST(MedianRecognition, OddCycleHasTripleWithoutMedian) {
    const Graph g = gen::cycle(5);
    const auto v = is_median(g);
    ASSERT_FALSE(v.median);
    EXPECT_EQ(v.witness_median_count, 0);
}

TEST(MedianRecognition, DisconnectedInputIsRejected) {
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    EXPECT_THROW(is_median(g), PreconditionError);
}

TEST(MedianGraphConstruction, RejectsNonMedianInput) {
    EXPECT_THROW(MedianGraph(gen::complete_bipartite(2, 3)), PreconditionError);
}

TEST(Hyperplanes, MatchThetaClassesAndHalfspaces) {
    for (const auto& f : fixtures::small_median_family(60)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        const auto d = oracle::floyd(f.graph);
        const auto cls = oracle::theta_classes(f.graph, d);
        ASSERT_EQ(g.hyperplane_count(), static_cast<int>(cls.size()));
        for (const auto& c : cls) {
            const auto [u, v] = c.edges.front();
            const int h = g.hyperplane_of_edge(*f.graph.edge_between(u, v));
            std::set<EdgeId> expected;
            for (const auto& [a, b] : c.edges) expected.insert(*f.graph.edge_between(a, b));
            const auto& got = g.hyperplane(h).dual_edges;
            EXPECT_EQ(std::set<EdgeId>(got.begin(), got.end()), expected);
            for (VertexId w = 0; w < g.vertex_count(); ++w)
                EXPECT_EQ(g.side(h, w) == g.side(h, u), c.side_u[static_cast<std::size_t>(w)]);
        }
    }
}

TEST(Hyperplanes, TransversalityMatchesQuarterSpaces) {
    for (const auto& f : fixtures::small_median_family(60)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        const auto cls = oracle::theta_classes(f.graph, oracle::floyd(f.graph));
        for (const auto& a : cls)
            for (const auto& b : cls) {
                const int h = g.hyperplane_of_edge(*f.graph.edge_between(a.edges[0].first, a.edges[0].second));
                const int k = g.hyperplane_of_edge(*f.graph.edge_between(b.edges[0].first, b.edges[0].second));
                if (h == k) continue;
                EXPECT_EQ(g.transverse(h, k), oracle::transverse(a, b));
                EXPECT_EQ(g.transverse(h, k), g.quarter_spaces_nonempty(h, k));
            }
    }
}

TEST(Hyperplanes, HalfspacesAreConvexAndComplementary) {
    for (const auto& f : fixtures::small_median_family(120)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        for (int h = 0; h < g.hyperplane_count(); ++h) {
            const auto& hp = g.hyperplane(h);
            EXPECT_TRUE((hp.halfspace_a & hp.halfspace_b).none());
            EXPECT_TRUE((hp.halfspace_a | hp.halfspace_b).all());
            EXPECT_TRUE(is_convex(f.graph, g.distances(), hp.halfspace_a).convex);
            EXPECT_TRUE(is_convex(f.graph, g.distances(), hp.halfspace_b).convex);
        }
    }
}

TEST(Hyperplanes, CountsOnKnownShapes) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(MedianGraph(gen::hypercube(n)).hyperplane_count(), n);
    EXPECT_EQ(MedianGraph(gen::grid(3, 2)).hyperplane_count(), 5);
    EXPECT_EQ(MedianGraph(gen::path(9)).hyperplane_count(), 9);
}

TEST(Metrics, L1CountsSeparatingHyperplanes) {
    for (const auto& f : fixtures::small_median_family(80)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        for (VertexId x = 0; x < g.vertex_count(); ++x)
            for (VertexId y = 0; y < g.vertex_count(); ++y) {
                const int sep = static_cast<int>(g.separating(x, y).size());
                EXPECT_EQ(g.dist(Metric::L1, x, y), sep);
                EXPECT_EQ(g.distances()(x, y), sep);
            }
    }
}

TEST(Metrics, LinfAgreesWithCubeConeOffAndDisjointChains) {
    for (const auto& f : fixtures::small_median_family(64)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        const auto d = oracle::floyd(f.graph);
        const auto linf = oracle::brute_linf(f.graph, d);
        for (VertexId x = 0; x < g.vertex_count(); ++x)
            for (VertexId y = 0; y < g.vertex_count(); ++y) {
                const int want = linf[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                EXPECT_EQ(g.dist(Metric::LINF, x, y), want);
                const auto chain = g.disjoint_chain(x, y);
                EXPECT_EQ(chain.length, want);
                for (std::size_t i = 0; i < chain.hyperplanes.size(); ++i)
                    for (std::size_t j = i + 1; j < chain.hyperplanes.size(); ++j)
                        EXPECT_FALSE(g.transverse(chain.hyperplanes[i], chain.hyperplanes[j]));
            }
    }
}

TEST(Metrics, LinfOnGrid3x2Corners) {
    const Graph grid = gen::grid(3, 2);
    const MedianGraph g(grid);
    EXPECT_EQ(g.dist(Metric::LINF, grid.at(gen::grid_name(0, 0)), grid.at(gen::grid_name(3, 2))), 3);
    EXPECT_EQ(g.dist(Metric::L1, grid.at(gen::grid_name(0, 0)), grid.at(gen::grid_name(3, 2))), 5);
}

TEST(Medians, UniqueMedianLiesOnAllThreeIntervals) {
    for (const auto& f : fixtures::small_median_family(30)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        const auto d = oracle::floyd(f.graph);
        const int n = g.vertex_count();
        for (VertexId x = 0; x < n; ++x)
            for (VertexId y = x; y < n; ++y)
                for (VertexId z = y; z < n; z += 3) {
                    const VertexId m = g.median(x, y, z);
                    EXPECT_EQ(medians_of(g.distances(), x, y, z), std::vector<VertexId>{m});
                    EXPECT_EQ(oracle::median_count(d, x, y, z), 1);
                    EXPECT_EQ(d[x][m] + d[m][y], d[x][y]);
                }
    }
}

TEST(Cubes, MaximalCubesOfKnownShapes) {
    for (int n = 1; n <= 5; ++n) {
        const MedianGraph g(gen::hypercube(n));
        ASSERT_EQ(g.maximal_cubes().size(), 1u);
        EXPECT_EQ(g.maximal_cubes()[0].dim, n);
        EXPECT_EQ(g.maximal_cubes()[0].vertices.size(), std::size_t{1} << n);
        EXPECT_EQ(g.dimension(), n);
    }
    const MedianGraph grid(gen::grid(3, 2));
    EXPECT_EQ(grid.maximal_cubes().size(), 6u);
    for (const auto& c : grid.maximal_cubes()) EXPECT_EQ(c.dim, 2);
    const MedianGraph tree(gen::path(4));
    EXPECT_EQ(tree.maximal_cubes().size(), 4u);
}

TEST(Cubes, CrossingHyperplanesArePairwiseTransverse) {
    for (const auto& f : fixtures::small_median_family(120)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        for (const auto& c : g.maximal_cubes()) {
            ASSERT_EQ(static_cast<int>(c.crossing.size()), c.dim);
            for (std::size_t i = 0; i < c.crossing.size(); ++i)
                for (std::size_t j = i + 1; j < c.crossing.size(); ++j)
                    EXPECT_TRUE(g.transverse(c.crossing[i], c.crossing[j]));
        }
    }
}

TEST(Convexity, OppositeCornersOfSquareAreNotConvex) {
    const Graph sq = gen::hypercube(2);
    const MedianGraph g(sq);
    const auto v = is_convex(sq, g.distances(), vertex_set(sq, {sq.at("00"), sq.at("11")}));
    EXPECT_FALSE(v.convex);
    EXPECT_TRUE(v.outside == sq.at("01") || v.outside == sq.at("10"));
    EXPECT_THROW(is_convex(sq, g.distances(), Bitset(4)), PreconditionError);
}

TEST(Projection, GateOntoIntervalsAndHalfspaces) {
    for (const auto& f : fixtures::small_median_family(60)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        const auto& d = g.distances();
        const int n = g.vertex_count();
        std::vector<Bitset> sets;
        for (int h = 0; h < g.hyperplane_count(); ++h) sets.push_back(g.hyperplane(h).halfspace_a);
        // Interval between vertex 0 and the last vertex.
        Bitset interval(static_cast<std::size_t>(n));
        for (VertexId m = 0; m < n; ++m)
            if (d(0, m) + d(m, n - 1) == d(0, n - 1)) interval.set(static_cast<std::size_t>(m));
        sets.push_back(interval);
        for (const auto& c : sets)
            for (VertexId x = 0; x < n; ++x) {
                const auto p = project(g, c, x);
                ASSERT_TRUE(c[static_cast<std::size_t>(p.image)]);
                for (VertexId y : members(c)) EXPECT_EQ(d(x, y), d(x, p.image) + d(p.image, y));
                for (int h : g.separating(x, p.image)) EXPECT_FALSE(g.crosses(h, c));
            }
    }
}

TEST(Projection, NonConvexTargetIsRejected) {
    const Graph sq = gen::hypercube(2);
    const MedianGraph g(sq);
    EXPECT_THROW(project(g, vertex_set(sq, {sq.at("00"), sq.at("11")}), sq.at("01")), PreconditionError);
}

TEST(Projection, SetProjectionCrossesOnlySharedHyperplanes) {
    const Graph grid = gen::grid(3, 3);
    const MedianGraph g(grid);
    Bitset row(static_cast<std::size_t>(grid.vertex_count())), col(row);
    for (int i = 0; i <= 3; ++i) row.set(static_cast<std::size_t>(grid.at(gen::grid_name(i, 0))));
    for (int j = 0; j <= 3; ++j) col.set(static_cast<std::size_t>(grid.at(gen::grid_name(3, j))));
    const auto p = project(g, row, col);
    EXPECT_EQ(members(p.image), std::vector<VertexId>{grid.at(gen::grid_name(3, 0))});
    EXPECT_TRUE(p.crossing_image.empty());
    EXPECT_EQ(p.crossing_image, p.crossing_both);
}

TEST(Extraction, RamseyBoundValues) {
    EXPECT_EQ(ram_bound(1), 2u);
    EXPECT_EQ(ram_bound(2), 6u);
    EXPECT_EQ(ram_bound(3), 20u);
}

TEST(Extraction, PairwiseFamiliesAreValid) {
    const MedianGraph g(gen::cartesian_product(gen::path(3), gen::hypercube(2)));
    std::vector<int> all(static_cast<std::size_t>(g.hyperplane_count()));
    for (int h = 0; h < g.hyperplane_count(); ++h) all[static_cast<std::size_t>(h)] = h;
    const auto dis = max_pairwise_disjoint(g, all);
    const auto tr = max_pairwise_transverse(g, all);
    EXPECT_EQ(dis.size(), 3u);
    EXPECT_EQ(tr.size(), 3u);
    for (int a : dis)
        for (int b : dis)
            if (a != b) EXPECT_FALSE(g.transverse(a, b));
    for (int a : tr)
        for (int b : tr)
            if (a != b) EXPECT_TRUE(g.transverse(a, b));
}
