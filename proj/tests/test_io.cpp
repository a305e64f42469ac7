#include <gtest/gtest.h>

#include "cubical/common.hpp"
#include "cubical/generators.hpp"
#include "cubical/io.hpp"
#include "fixtures.hpp"

using namespace cubical;

TEST(GraphText, WriteThenParseIsIdentity) {
    for (const auto& f : fixtures::median_family(200)) {
        SCOPED_TRACE(f.name);
        const Graph back = io::parse_graph(io::write_graph(f.graph));
        EXPECT_EQ(back.names(), f.graph.names());
        ASSERT_EQ(back.edge_count(), f.graph.edge_count());
        for (const auto& e : f.graph.edges()) EXPECT_TRUE(back.adjacent(e.u, e.v));
        EXPECT_EQ(io::write_graph(back), io::write_graph(f.graph));
    }
}

TEST(GraphText, OrderInsensitiveWithComments) {
    const Graph g = io::parse_graph("edge a b   # first\n\nvertex c\nvertex a\nedge b c\nvertex b\nsub s : a b\n");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 2);
    const auto subs = io::parse_subsets("vertex a\nsub s : a b\n", io::parse_graph("vertex a\nvertex b\n"));
    ASSERT_EQ(subs.size(), 1u);
    EXPECT_EQ(subs[0].name, "s");
    EXPECT_EQ(subs[0].vertices.size(), 2u);
    EXPECT_EQ(subs[0].line, 2u);
}

TEST(GraphText, ErrorsCarryPositions) {
    try {
        io::parse_graph("vertex a\nedge a\n");
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    try {
        io::parse_graph("vertex a\nedge a b\n");
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos);
    }
    EXPECT_THROW(io::parse_graph("node a\n"), InputError);
    EXPECT_THROW(io::parse_subsets("sub s : z\n", io::parse_graph("vertex a\n")), InputError);
    EXPECT_THROW(io::read_file("tests/data/does-not-exist.graph"), InputError);
}

TEST(Tokens, CommentsAndColumns) {
    const auto t = io::tokenize("  edge a  b # c");
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0].text, "edge");
    EXPECT_EQ(t[0].column, 3u);
    EXPECT_EQ(t[2].column, 11u);
}

TEST(Digest, StableAndContentSensitive) {
    EXPECT_EQ(io::digest("abc"), io::digest("abc"));
    EXPECT_NE(io::digest("abc"), io::digest("abd"));
    // FNV-1a of the empty string.
    EXPECT_EQ(io::digest(""), "cbf29ce484222325");
}

TEST(Generators, ShapesHaveExpectedSizes) {
    EXPECT_EQ(gen::hypercube(4).vertex_count(), 16);
    EXPECT_EQ(gen::hypercube(4).edge_count(), 32);
    EXPECT_EQ(gen::grid(3, 2).vertex_count(), 12);
    EXPECT_EQ(gen::grid(3, 2).edge_count(), 17);
    EXPECT_EQ(gen::complete_bipartite(2, 3).edge_count(), 6);
    EXPECT_EQ(gen::cartesian_product(gen::path(2), gen::path(3)).edge_count(), 17);
    EXPECT_EQ(gen::cube_name(0b101, 3), "101");
    EXPECT_EQ(gen::grid_name(2, 0), "(2,0)");
}
