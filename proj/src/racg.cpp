#include "cubical/racg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <boost/pending/disjoint_sets.hpp>

#include "cubical/io.hpp"

namespace cubical::racg {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const VertexSet& outer, const VertexSet& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void normalize(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Plain union-find over dense integer ids.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : rank_(n), parent_(n), sets_(rank_.data(), parent_.data()) {
        for (std::size_t i = 0; i < n; ++i) sets_.make_set(i);
    }
    void unite(std::size_t a, std::size_t b) { sets_.union_set(a, b); }
    std::size_t find(std::size_t a) { return sets_.find_set(a); }

private:
    std::vector<std::size_t> rank_, parent_;
    boost::disjoint_sets<std::size_t*, std::size_t*> sets_;
};

}  // namespace

Word parse_word(const Graph& gamma, std::string_view text) {
    Word w;
    const bool e_is_generator = gamma.find("e").has_value();
    for (const auto& t : io::tokenize(text)) {
        if (t.text == "e" && !e_is_generator) continue;
        const auto v = gamma.find(t.text);
        if (!v) throw InputError("unknown generator '" + t.text + "'", 0, t.column);
        w.push_back(*v);
    }
    return w;
}

std::string format_word(const Graph& gamma, const Word& w, std::string_view sep) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += sep;
        out += gamma.name(w[i]);
    }
    return out;
}

bool commute(const Graph& gamma, VertexId s, VertexId t) { return gamma.adjacent(s, t); }

Word normal_form(const Graph& gamma, const Word& w) {
    // Reduce: an appended letter cancels the last equal letter iff every
    // letter after that occurrence commutes with it.
    Word reduced;
    for (VertexId s : w) {
        if (s < 0 || s >= gamma.vertex_count()) throw InputError("generator id out of range");
        bool cancelled = false;
        for (std::size_t i = reduced.size(); i-- > 0;) {
            if (reduced[i] == s) {
                reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
                cancelled = true;
                break;
            }
            if (!commute(gamma, s, reduced[i])) break;
        }
        if (!cancelled) reduced.push_back(s);
    }
    // Reduced spellings differ only by commutations, so the least one is the
    // greedy linearization always taking the smallest movable letter.
    Word out;
    out.reserve(reduced.size());
    while (!reduced.empty()) {
        std::size_t pick = 0;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            bool movable = true;
            for (std::size_t j = 0; j < i && movable; ++j) movable = commute(gamma, reduced[j], reduced[i]);
            if (movable && reduced[i] < reduced[pick]) pick = i;
        }
        out.push_back(reduced[pick]);
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

bool same_element(const Graph& gamma, const Word& u, const Word& v) {
    return normal_form(gamma, u) == normal_form(gamma, v);
}

Ball ball(const Graph& gamma, int r, long cap) {
    if (r < 0) throw PreconditionError("ball radius must be nonnegative");
    const int outer = r + 2;
    std::vector<Word> elements{Word{}};
    std::map<Word, VertexId> index{{Word{}, 0}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (static_cast<int>(elements[i].size()) == outer) continue;
        for (VertexId s = 0; s < gamma.vertex_count(); ++s) {
            Word w = elements[i];
            w.push_back(s);
            w = normal_form(gamma, w);
            if (index.count(w)) continue;
            if (static_cast<long>(elements.size()) >= cap)
                throw PreconditionError("ball of radius " + std::to_string(outer) + " exceeds the cap of " +
                                        std::to_string(cap) + " elements");
            index.emplace(w, static_cast<VertexId>(elements.size()));
            elements.push_back(std::move(w));
        }
    }
    // Elements come in BFS order, so the inner ball is a prefix.
    Graph big;
    for (const auto& w : elements) big.add_vertex(format_word(gamma, w, "."));
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (VertexId s = 0; s < gamma.vertex_count(); ++s) {
            Word w = elements[i];
            w.push_back(s);
            const auto it = index.find(normal_form(gamma, w));
            if (it == index.end()) continue;
            const auto a = static_cast<VertexId>(i), b = it->second;
            if (a < b) big.add_edge(a, b);
        }

    UnionFind classes(idx(big.edge_count()));
    for (VertexId a = 0; a < big.vertex_count(); ++a) {
        const auto& nb = big.neighbors(a);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                for (VertexId d : big.neighbors(nb[i])) {
                    if (d == a || !big.adjacent(d, nb[j])) continue;
                    // Square a - nb[i] - d - nb[j].
                    classes.unite(idx(*big.edge_between(a, nb[i])), idx(*big.edge_between(nb[j], d)));
                    classes.unite(idx(*big.edge_between(a, nb[j])), idx(*big.edge_between(nb[i], d)));
                }
    }

    Ball out;
    out.radius = r;
    std::vector<VertexId> keep;
    for (std::size_t i = 0; i < elements.size() && static_cast<int>(elements[i].size()) <= r; ++i) {
        keep.push_back(static_cast<VertexId>(i));
        out.index.emplace(elements[i], static_cast<VertexId>(i));
        out.elements.push_back(elements[i]);
    }
    out.graph = big.induced(keep);
    std::map<std::size_t, int> dense;
    for (const auto& e : out.graph.edges()) {
        const auto root = classes.find(idx(*big.edge_between(e.u, e.v)));
        const auto it = dense.emplace(root, static_cast<int>(dense.size())).first;
        out.edge_labels.push_back(it->second);
    }
    out.label_count = static_cast<int>(dense.size());
    return out;
}

VertexId ball_vertex(const Graph& gamma, const Ball& b, const Word& w) {
    const auto it = b.index.find(normal_form(gamma, w));
    return it == b.index.end() ? -1 : it->second;
}

bool is_complete(const Graph& gamma, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!gamma.adjacent(s[i], s[j])) return false;
    return true;
}

VertexSet link(const Graph& gamma, VertexId v) { return gamma.neighbors(v); }

VertexSet star(const Graph& gamma, VertexId v) {
    VertexSet s = gamma.neighbors(v);
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
}

std::vector<VertexSet> induced_squares(const Graph& gamma) {
    std::vector<VertexSet> out;
    const int n = gamma.vertex_count();
    // Opposite corners a < c are non-adjacent with two non-adjacent common neighbours.
    for (VertexId a = 0; a < n; ++a)
        for (VertexId c = a + 1; c < n; ++c) {
            if (gamma.adjacent(a, c)) continue;
            const VertexSet common = intersect(gamma.neighbors(a), gamma.neighbors(c));
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!gamma.adjacent(common[i], common[j])) {
                        VertexSet sq{a, c, common[i], common[j]};
                        std::sort(sq.begin(), sq.end());
                        out.push_back(sq);
                    }
        }
    normalize(out);
    return out;
}

VertexSet square_vertices(const Graph& gamma) {
    VertexSet out;
    for (const auto& sq : induced_squares(gamma)) out = unite(out, sq);
    return out;
}

bool is_large_join(const Graph& gamma, const VertexSet& s) {
    // Join sides are unions of components of the complement graph; a side is
    // non-complete iff it holds a complement component with two vertices.
    std::vector<int> comp(s.size(), -1);
    int big_components = 0;
    for (std::size_t start = 0; start < s.size(); ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = static_cast<int>(start);
        std::deque<std::size_t> queue{start};
        int size = 0;
        while (!queue.empty()) {
            const auto i = queue.front();
            queue.pop_front();
            ++size;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (comp[j] < 0 && j != i && !gamma.adjacent(s[i], s[j])) {
                    comp[j] = static_cast<int>(start);
                    queue.push_back(j);
                }
        }
        big_components += size >= 2;
    }
    return big_components >= 2;
}

std::vector<VertexSet> maximal_large_joins(const Graph& gamma, int max_vertices) {
    const int n = gamma.vertex_count();
    if (n > max_vertices)
        throw PreconditionError("large-join enumeration is exhaustive and limited to " +
                                std::to_string(max_vertices) + " vertices");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) >= 4) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) > __builtin_popcount(b); });
    std::vector<std::uint32_t> found;
    for (std::uint32_t m : masks) {
        if (std::any_of(found.begin(), found.end(), [&](std::uint32_t f) { return (m & ~f) == 0; })) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1u) s.push_back(v);
        if (is_large_join(gamma, s)) found.push_back(m);
    }
    std::vector<VertexSet> out;
    for (std::uint32_t m : found) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1u) s.push_back(v);
        out.push_back(std::move(s));
    }
    normalize(out);
    return out;
}

ContractingGenerators contracting_generators(const Graph& gamma) {
    ContractingGenerators out;
    out.squares = square_vertices(gamma);
    for (VertexId u = 0; u < gamma.vertex_count(); ++u)
        out.contracting.push_back(!std::binary_search(out.squares.begin(), out.squares.end(), u));
    for (VertexId u : out.squares) out.star_peripherals.push_back(star(gamma, u));
    out.join_peripherals = maximal_large_joins(gamma);
    return out;
}

VertexSet cp(const Graph& gamma, const VertexSet& lambda) {
    VertexSet out = lambda;
    for (VertexId v = 0; v < gamma.vertex_count(); ++v) {
        if (std::binary_search(lambda.begin(), lambda.end(), v)) continue;
        if (!is_complete(gamma, intersect(link(gamma, v), lambda))) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

JoinDecomposition j_infinity(const Graph& gamma, Seed seed) {
    JoinDecomposition out;
    std::vector<VertexSet> stage = seed == Seed::SQUARES ? induced_squares(gamma) : maximal_large_joins(gamma);
    normalize(stage);
    out.trace.push_back(stage);
    for (;;) {
        UnionFind comps(stage.size());
        for (std::size_t i = 0; i < stage.size(); ++i)
            for (std::size_t j = i + 1; j < stage.size(); ++j)
                if (!is_complete(gamma, intersect(stage[i], stage[j]))) comps.unite(i, j);
        std::map<std::size_t, VertexSet> unions;
        for (std::size_t i = 0; i < stage.size(); ++i) {
            auto& u = unions[comps.find(i)];
            u = unite(u, stage[i]);
        }
        std::vector<VertexSet> next;
        for (const auto& [root, u] : unions) next.push_back(cp(gamma, u));
        normalize(next);
        if (next == stage) break;
        stage = std::move(next);
        out.trace.push_back(stage);
    }
    out.members = stage;
    return out;
}

DecompositionCheck check_decomposition(const Graph& gamma, const std::vector<VertexSet>& members) {
    DecompositionCheck out;
    auto fail = [&](std::string why) {
        out.valid = false;
        out.failure = std::move(why);
        return out;
    };
    for (const auto& j : maximal_large_joins(gamma)) {
        const bool covered =
            std::any_of(members.begin(), members.end(), [&](const VertexSet& m) { return contains(m, j); });
        if (!covered) return fail("large join " + format_set(gamma, j) + " lies in no member");
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t k = i + 1; k < members.size(); ++k)
            if (!is_complete(gamma, intersect(members[i], members[k])))
                return fail("members " + format_set(gamma, members[i]) + " and " + format_set(gamma, members[k]) +
                            " meet in a non-complete set");
    for (const auto& m : members)
        for (VertexId v = 0; v < gamma.vertex_count(); ++v)
            if (!std::binary_search(m.begin(), m.end(), v) && !is_complete(gamma, intersect(link(gamma, v), m)))
                return fail("link of " + gamma.name(v) + " meets " + format_set(gamma, m) +
                            " in a non-complete set but the vertex is outside it");
    return out;
}

RelHypReport relhyp_report(const Graph& gamma) {
    RelHypReport out;
    out.decomposition = j_infinity(gamma, Seed::LARGE_JOINS);
    VertexSet all(idx(gamma.vertex_count()));
    for (VertexId v = 0; v < gamma.vertex_count(); ++v) all[idx(v)] = v;
    const auto& m = out.decomposition.members;
    out.relatively_hyperbolic = !(m.size() == 1 && m.front() == all);
    out.peripherals = m;
    return out;
}

BallGridCheck ball_grid_check(const Graph& gamma, VertexId u, int r, int max_n, long cap) {
    if (r < 1) throw PreconditionError("ball grid check needs radius >= 1");
    BallGridCheck out;
    out.radius = r;
    const Ball b = ball(gamma, r);
    const MedianGraph g(b.graph);
    const VertexId e = ball_vertex(gamma, b, Word{});
    const VertexId gu = ball_vertex(gamma, b, Word{u});
    const int h = g.hyperplane_between(e, gu);
    out.dimension = g.hyperplane(h).dimension;
    for (int n = out.dimension + 1; n <= max_n; ++n) {
        bool capped = false;
        out.n_values.push_back(n);
        out.grid_found.push_back(grid_through(g, h, n, cap, &capped).has_value());
        out.capped = out.capped || capped;
    }
    return out;
}

std::string format_set(const Graph& gamma, const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + gamma.name(s[i]);
    return out + "}";
}

const char* to_string(Seed seed) { return seed == Seed::SQUARES ? "squares" : "joins"; }

}  // namespace cubical::racg
