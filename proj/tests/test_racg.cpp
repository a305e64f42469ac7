#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cubical/generators.hpp"
#include "cubical/io.hpp"
#include "cubical/racg.hpp"
#include "oracles.hpp"

using namespace cubical;
using namespace cubical::racg;

namespace {

Graph load(const std::string& file) { return io::parse_graph(io::read_file("tests/data/" + file)); }

Graph square_with_pendant() {
    Graph g = gen::cycle(4);
    g.ensure_vertex("x");
    g.add_edge("0", "x");
    return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

VertexSet ids(const Graph& g, const std::vector<std::string>& names) {
    VertexSet out;
    for (const auto& s : names) out.push_back(g.at(s));
    std::sort(out.begin(), out.end());
    return out;
}

Word random_word(int gens, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, gens - 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(pick(rng));
    return w;
}

}  // namespace

TEST(WordProblem, NormalFormAgreesWithDeletionRule) {
    std::mt19937_64 rng(7);
    for (const Graph& gamma : {gen::cycle(4), gen::cycle(5), gen::path(3), square_with_pendant()}) {
        for (int trial = 0; trial < 300; ++trial) {
            const Word u = random_word(gamma.vertex_count(), 1 + trial % 9, rng);
            const Word v = random_word(gamma.vertex_count(), 1 + trial % 7, rng);
            EXPECT_EQ(normal_form(gamma, u).size(), oracle::coxeter_reduce(gamma, u).size());
            EXPECT_EQ(same_element(gamma, u, v), oracle::coxeter_equal(gamma, u, v));
            EXPECT_TRUE(oracle::coxeter_equal(gamma, u, normal_form(gamma, u)));
        }
    }
}

TEST(WordProblem, CommutingLettersAndInvolutions) {
    const Graph c4 = gen::cycle(4);
    EXPECT_TRUE(commute(c4, 0, 1));
    EXPECT_FALSE(commute(c4, 0, 2));
    EXPECT_TRUE(normal_form(c4, parse_word(c4, "0 0")).empty());
    EXPECT_EQ(normal_form(c4, parse_word(c4, "1 0")), parse_word(c4, "0 1"));
    EXPECT_EQ(normal_form(c4, parse_word(c4, "2 0")), parse_word(c4, "2 0"));
    EXPECT_TRUE(parse_word(c4, "e").empty());
    EXPECT_EQ(format_word(c4, parse_word(c4, "3 1")), "3 1");
    EXPECT_THROW(parse_word(c4, "9"), InputError);
}

TEST(Balls, SizeMatchesDistinctElements) {
    const Graph gamma = gen::cycle(5);
    for (int r = 0; r <= 3; ++r) {
        const Ball b = ball(gamma, r);
        // Reduced words of length <= r, deduplicated under the deletion-rule word problem.
        std::vector<Word> distinct;
        std::vector<Word> frontier{Word{}};
        for (int len = 0; len <= r; ++len) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                if (static_cast<int>(oracle::coxeter_reduce(gamma, w).size()) == len &&
                    std::none_of(distinct.begin(), distinct.end(),
                                 [&](const Word& x) { return oracle::coxeter_equal(gamma, x, w); }))
                    distinct.push_back(w);
                for (int s = 0; s < gamma.vertex_count(); ++s) {
                    Word x = w;
                    x.push_back(s);
                    next.push_back(x);
                }
            }
            frontier = std::move(next);
        }
        EXPECT_EQ(static_cast<int>(b.elements.size()), static_cast<int>(distinct.size())) << "radius " << r;
        EXPECT_EQ(b.graph.vertex_count(), static_cast<int>(b.elements.size()));
    }
}

TEST(Balls, EdgeLabelsAreReflections) {
    // The edge g -- gs is dual to the hyperplane of the reflection g s g^-1.
    for (const Graph& gamma : {gen::cycle(4), gen::cycle(5), gen::path(3)}) {
        const Ball b = ball(gamma, 2);
        std::vector<Word> reflection;
        for (const auto& e : b.graph.edges()) {
            Word g = b.elements[static_cast<std::size_t>(e.u)];
            const Word& h = b.elements[static_cast<std::size_t>(e.v)];
            Word s = g;
            std::reverse(s.begin(), s.end());
            s.insert(s.end(), h.begin(), h.end());
            s = oracle::coxeter_reduce(gamma, s);
            ASSERT_EQ(s.size(), 1u);
            Word refl = g;
            refl.push_back(s[0]);
            refl.insert(refl.end(), g.rbegin(), g.rend());
            reflection.push_back(refl);
        }
        const auto& es = b.graph.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j)
                EXPECT_EQ(b.edge_labels[i] == b.edge_labels[j], oracle::coxeter_equal(gamma, reflection[i], reflection[j]));
    }
}

TEST(Balls, VertexLookupAndCaps) {
    const Graph gamma = gen::cycle(4);
    const Ball b = ball(gamma, 2);
    EXPECT_EQ(ball_vertex(gamma, b, Word{}), 0);
    EXPECT_GE(ball_vertex(gamma, b, Word{2, 0}), 0);
    EXPECT_EQ(ball_vertex(gamma, b, Word{0, 2, 0}), -1);
    EXPECT_THROW(ball(gamma, 6, 10), PreconditionError);
    EXPECT_THROW(ball(gamma, -1), PreconditionError);
}

TEST(DefiningGraph, InducedSquaresMatchSubsetScan) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        const Graph g = random_graph(7, 0.5, rng);
        EXPECT_EQ(induced_squares(g), oracle::brute_induced_squares(g));
    }
}

TEST(DefiningGraph, LinksStarsAndJoins) {
    const Graph c4 = gen::cycle(4);
    EXPECT_EQ(link(c4, 0), (VertexSet{1, 3}));
    EXPECT_EQ(star(c4, 0), (VertexSet{0, 1, 3}));
    EXPECT_TRUE(is_large_join(c4, {0, 1, 2, 3}));
    EXPECT_FALSE(is_large_join(c4, {0, 1, 2}));
    EXPECT_TRUE(is_complete(c4, {0, 1}));
    EXPECT_EQ(maximal_large_joins(c4), (std::vector<VertexSet>{{0, 1, 2, 3}}));
    EXPECT_TRUE(maximal_large_joins(gen::cycle(5)).empty());
    EXPECT_THROW(maximal_large_joins(gen::path(20), 16), PreconditionError);
}

TEST(Contracting, GeneratorsOffSquaresAreContracting) {
    for (bool c : contracting_generators(gen::cycle(4)).contracting) EXPECT_FALSE(c);
    for (bool c : contracting_generators(gen::cycle(5)).contracting) EXPECT_TRUE(c);
    for (bool c : contracting_generators(gen::path(3)).contracting) EXPECT_TRUE(c);
    const Graph sp = square_with_pendant();
    const auto r = contracting_generators(sp);
    EXPECT_TRUE(r.contracting[static_cast<std::size_t>(sp.at("x"))]);
    EXPECT_FALSE(r.contracting[static_cast<std::size_t>(sp.at("0"))]);
    EXPECT_EQ(r.squares, ids(sp, {"0", "1", "2", "3"}));
}

TEST(Contracting, BallChecksAgreeWithGraphVerdict) {
    for (const Graph& gamma : {gen::cycle(4), gen::cycle(5), gen::path(3), square_with_pendant()}) {
        const auto verdict = contracting_generators(gamma);
        for (VertexId u = 0; u < gamma.vertex_count(); ++u) {
            const auto c = ball_grid_check(gamma, u, 3);
            EXPECT_FALSE(c.capped);
            const bool any = std::find(c.grid_found.begin(), c.grid_found.end(), true) != c.grid_found.end();
            if (verdict.contracting[static_cast<std::size_t>(u)]) EXPECT_FALSE(any);
        }
    }
    EXPECT_THROW(ball_grid_check(gen::cycle(4), 0, 0), PreconditionError);
}

TEST(JoinDecomposition, CpAddsVerticesWithNonCompleteLinks) {
    const Graph c4 = gen::cycle(4);
    // Vertex 1 sees {0, 2}, which is not complete.
    EXPECT_EQ(cp(c4, {0, 2}), (VertexSet{0, 1, 2, 3}));
    EXPECT_EQ(cp(c4, {0}), (VertexSet{0}));
}

TEST(JoinDecomposition, VerdictsOnStandardGraphs) {
    const auto c4 = relhyp_report(gen::cycle(4));
    EXPECT_FALSE(c4.relatively_hyperbolic);
    const auto c5 = relhyp_report(gen::cycle(5));
    EXPECT_TRUE(c5.relatively_hyperbolic);
    EXPECT_TRUE(c5.peripherals.empty());
    const Graph two = load("two_squares_path.graph");
    const auto r = relhyp_report(two);
    EXPECT_TRUE(r.relatively_hyperbolic);
    EXPECT_EQ(r.peripherals, (std::vector<VertexSet>{ids(two, {"a1", "a2", "a3", "a4"}), ids(two, {"b1", "b2", "b3", "b4"})}));
}

TEST(JoinDecomposition, SeedInvarianceAndValidity) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_graph(4 + i % 6, 0.45, rng);
        const auto a = j_infinity(g, Seed::SQUARES);
        const auto b = j_infinity(g, Seed::LARGE_JOINS);
        EXPECT_EQ(a.members, b.members);
        const auto check = check_decomposition(g, a.members);
        EXPECT_TRUE(check.valid) << check.failure;
        EXPECT_FALSE(a.trace.empty());
    }
}

TEST(JoinDecomposition, MinimalAmongValidDecompositions) {
    const Graph two = load("two_squares_path.graph");
    const auto a = ids(two, {"a1", "a2", "a3", "a4"});
    const auto b = ids(two, {"b1", "b2", "b3", "b4"});
    const auto ap = ids(two, {"a1", "a2", "a3", "a4", "p"});
    const auto bp = ids(two, {"b1", "b2", "b3", "b4", "p"});
    VertexSet all(static_cast<std::size_t>(two.vertex_count()));
    for (VertexId v = 0; v < two.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    const auto j = j_infinity(two, Seed::SQUARES).members;
    for (const auto& d : std::vector<std::vector<VertexSet>>{{all}, {ap, b}, {a, bp}, {ap, bp}}) {
        ASSERT_TRUE(check_decomposition(two, d).valid);
        for (const auto& m : j)
            EXPECT_TRUE(std::any_of(d.begin(), d.end(), [&](const VertexSet& big) {
                return std::includes(big.begin(), big.end(), m.begin(), m.end());
            }));
    }
    // Two members meeting in a non-edge pair are not a decomposition.
    EXPECT_FALSE(check_decomposition(gen::cycle(4), {{0, 1, 2}, {0, 2, 3}}).valid);
}
