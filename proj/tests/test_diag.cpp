#include <gtest/gtest.h>

#include <algorithm>

#include "cubical/diag.hpp"
#include "cubical/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cubical;

namespace {

oracle::Matrix to_matrix(const DistanceMatrix& d) {
    oracle::Matrix m(static_cast<std::size_t>(d.size()), std::vector<int>(static_cast<std::size_t>(d.size())));
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d(i, j);
    return m;
}

std::vector<std::pair<int, int>> sorted(std::vector<std::pair<int, int>> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(GridSearch, MatchesSubsetBruteForce) {
    int compared = 0;
    for (const auto& f : fixtures::small_median_family(200)) {
        const MedianGraph g(f.graph);
        if (g.hyperplane_count() > 14) continue;
        SCOPED_TRACE(f.name);
        const auto got = max_grid(g);
        const auto want = oracle::brute_grid(f.graph, oracle::floyd(f.graph));
        EXPECT_FALSE(got.lower_bound);
        EXPECT_EQ(got.thinness, want.thinness);
        EXPECT_EQ(sorted(got.pareto), want.pareto);
        ++compared;
    }
    EXPECT_GE(compared, 20);
}

TEST(GridSearch, Grid3x2HasSingleParetoPoint) {
    const MedianGraph g(gen::grid(3, 2));
    const auto s = max_grid(g);
    EXPECT_EQ(s.pareto, (std::vector<std::pair<int, int>>{{3, 2}}));
    EXPECT_EQ(s.thinness, 2);
    ASSERT_EQ(s.witnesses.size(), 1u);
    EXPECT_TRUE(is_grid(g, s.witnesses[0]));
}

TEST(GridSearch, TreesAndCubesHaveThinGrids) {
    EXPECT_EQ(max_grid(MedianGraph(gen::path(6))).thinness, 0);
    // Pairwise transverse hyperplanes form chains of length one.
    EXPECT_EQ(max_grid(MedianGraph(gen::hypercube(5))).thinness, 1);
    EXPECT_EQ(max_grid(MedianGraph(gen::grid(4, 4))).thinness, 4);
}

TEST(GridSearch, IsGridRejectsBrokenFamilies) {
    const MedianGraph g(gen::grid(2, 2));
    std::vector<int> vert, hor;
    for (int h = 0; h < g.hyperplane_count(); ++h) {
        // Vertical hyperplanes separate (0,0) from (1,0) or (1,0) from (2,0).
        const Graph& gr = g.graph();
        if (g.separates(h, gr.at(gen::grid_name(0, 0)), gr.at(gen::grid_name(2, 0)))) vert.push_back(h);
        else hor.push_back(h);
    }
    ASSERT_EQ(vert.size(), 2u);
    ASSERT_EQ(hor.size(), 2u);
    EXPECT_TRUE(is_grid(g, Grid{vert, hor}));
    std::string why;
    EXPECT_FALSE(is_grid(g, Grid{{vert[0], hor[0]}, {hor[1]}}, &why));
    EXPECT_FALSE(why.empty());
}

TEST(GridThrough, FindsGridContainingHyperplane) {
    const MedianGraph g(gen::grid(3, 3));
    for (int h = 0; h < g.hyperplane_count(); ++h) {
        const auto grid = grid_through(g, h, 3);
        ASSERT_TRUE(grid.has_value());
        EXPECT_TRUE(is_grid(g, *grid));
        EXPECT_NE(std::find(grid->verticals.begin(), grid->verticals.end(), h), grid->verticals.end());
        EXPECT_FALSE(grid_through(g, h, 4).has_value());
    }
    EXPECT_THROW(grid_through(g, 0, 0), std::invalid_argument);
}

TEST(Rectangles, SearchMatchesEmbeddingEnumeration) {
    int compared = 0;
    for (const auto& f : fixtures::small_median_family(40)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        const auto r = max_thick_rectangle(g);
        EXPECT_EQ(r.thickness, oracle::brute_rectangle_thickness(f.graph, oracle::floyd(f.graph)));
        if (r.witness) EXPECT_TRUE(is_flat_rectangle(f.graph, g.distances(), *r.witness));
        ++compared;
    }
    EXPECT_GE(compared, 15);
}

TEST(Rectangles, KnownThickness) {
    EXPECT_EQ(max_thick_rectangle(MedianGraph(gen::hypercube(4))).thickness, 2);
    EXPECT_EQ(max_thick_rectangle(MedianGraph(gen::grid(5, 4))).thickness, 4);
    EXPECT_EQ(max_thick_rectangle(MedianGraph(gen::path(5))).thickness, 0);
}

TEST(Rectangles, HypercubeConstructionIsFlat) {
    for (int n = 2; n <= 8; ++n) {
        SCOPED_TRACE(n);
        const Graph cube = gen::hypercube(n);
        const auto r = hypercube_rectangle(cube, n);
        EXPECT_EQ(r.thickness(), n / 2);
        EXPECT_TRUE(is_flat_rectangle(cube, DistanceMatrix(cube), r));
    }
}

TEST(Rectangles, CornerConstructionIsFlat) {
    const Graph grid = gen::grid(4, 3);
    const MedianGraph g(grid);
    const auto r = rectangle_from_corners(g, grid.at(gen::grid_name(1, 0)), grid.at(gen::grid_name(4, 0)),
                                          grid.at(gen::grid_name(1, 3)));
    EXPECT_EQ(r.a, 3);
    EXPECT_EQ(r.b, 3);
    EXPECT_TRUE(is_flat_rectangle(grid, g.distances(), r));
    int visits = 0;
    for_each_rectangle_corner(g, 3, [&](VertexId, VertexId, VertexId) { ++visits; });
    EXPECT_GT(visits, 0);
}

TEST(Rectangles, NonIsometricMapIsRejected) {
    const Graph cube = gen::hypercube(3);
    FlatRectangle r{1, 1, {cube.at("000"), cube.at("100"), cube.at("010"), cube.at("111")}};
    EXPECT_FALSE(is_flat_rectangle(cube, DistanceMatrix(cube), r));
}

TEST(Delta, MatchesQuadrupleBruteForce) {
    for (const auto& f : fixtures::small_median_family(30)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        EXPECT_EQ(delta(g, Metric::L1).twice_delta, oracle::brute_twice_delta(oracle::floyd(f.graph)));
        EXPECT_EQ(delta(g, Metric::LINF).twice_delta,
                  oracle::brute_twice_delta(oracle::brute_linf(f.graph, oracle::floyd(f.graph))));
    }
}

TEST(Delta, KnownValues) {
    const auto c4 = delta(MedianGraph(gen::cycle(4)), Metric::L1);
    EXPECT_EQ(c4.twice_delta, 2);
    EXPECT_DOUBLE_EQ(c4.value(), 1.0);
    EXPECT_EQ(delta(MedianGraph(gen::grid(4, 4)), Metric::LINF).twice_delta, 4);
    EXPECT_EQ(delta(MedianGraph(gen::path(7)), Metric::L1).twice_delta, 0);
}

TEST(Delta, SamplingGivesLowerBound) {
    const MedianGraph g(gen::grid(6, 6));
    DeltaOptions opt;
    opt.max_vertices = 20;
    EXPECT_THROW(delta(g, Metric::L1, opt), PreconditionError);
    opt.sample = true;
    opt.samples = 2000;
    const auto s = delta(g, Metric::L1, opt);
    EXPECT_TRUE(s.lower_bound);
    EXPECT_LE(s.twice_delta, delta(g, Metric::L1).twice_delta);
}

TEST(Bigons, MatchGeodesicEnumeration) {
    for (const auto& f : fixtures::small_median_family(32)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        const auto d = oracle::floyd(f.graph);
        EXPECT_EQ(bigon_thinness(g, Metric::L1).thinness, oracle::brute_bigon(f.graph, d, d));
        EXPECT_EQ(bigon_thinness(g, Metric::LINF).thinness,
                  oracle::brute_bigon(f.graph, d, oracle::brute_linf(f.graph, d)));
    }
}

TEST(Bigons, KnownValuesAndWitness) {
    const MedianGraph cube(gen::hypercube(3));
    const auto b = bigon_thinness(cube, Metric::L1);
    EXPECT_EQ(b.thinness, 1);
    EXPECT_EQ(hausdorff(cube.distances(), b.first, b.second), 1);
    EXPECT_EQ(b.first.front(), b.second.front());
    EXPECT_EQ(b.first.back(), b.second.back());
    EXPECT_EQ(bigon_thinness(MedianGraph(gen::path(5)), Metric::L1).thinness, 0);
}

TEST(HyperbolicityBounds, GridRectangleAndBigonInequalities) {
    for (const auto& f : fixtures::small_median_family(120)) {
        SCOPED_TRACE(f.name);
        const MedianGraph g(f.graph);
        const int grid = max_grid(g).thinness;
        EXPECT_LE(grid, max_thick_rectangle(g).thickness + 1);
        EXPECT_LE(static_cast<std::uint64_t>(bigon_thinness(g, Metric::L1).thinness), 2 * ram_bound(grid));
        EXPECT_LE(grid, 4 * delta(g, Metric::LINF).value() + 2);
        EXPECT_LE(bigon_thinness(g, Metric::LINF).thinness, grid + 3);
    }
}

TEST(Hausdorff, SymmetricMaxOfNearestDistances) {
    const Graph p = gen::path(4);
    const DistanceMatrix d(p);
    EXPECT_EQ(hausdorff(d, {0, 1}, {3, 4}), 3);
    EXPECT_EQ(hausdorff(d, {0, 1, 2}, {2}), 2);
    EXPECT_EQ(to_matrix(d)[0][4], 4);
}
