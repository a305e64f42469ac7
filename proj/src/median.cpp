#include "cubical/median.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "cliques.hpp"

namespace cubical {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// I(x, y) for all y, by propagation along the BFS layers from x.
std::vector<Bitset> intervals_from(const Graph& g, const DistanceMatrix& d, VertexId x) {
    const int n = g.vertex_count();
    std::vector<VertexId> order(idx(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return d(x, a) < d(x, b); });
    std::vector<Bitset> out(idx(n), Bitset(idx(n)));
    for (VertexId y : order) {
        out[idx(y)].set(idx(y));
        for (VertexId w : g.neighbors(y))
            if (d(x, w) == d(x, y) - 1) out[idx(y)] |= out[idx(w)];
    }
    return out;
}

}  // namespace

std::uint64_t ram_bound(int d) {
    if (d < 0) throw std::invalid_argument("ram_bound: negative argument");
    std::uint64_t r = 1;
    for (int i = 1; i <= d; ++i) r = r * static_cast<std::uint64_t>(d + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<VertexId> medians_of(const DistanceMatrix& d, VertexId x, VertexId y, VertexId z) {
    std::vector<VertexId> out;
    for (VertexId m = 0; m < d.size(); ++m)
        if (d(x, m) + d(m, y) == d(x, y) && d(y, m) + d(m, z) == d(y, z) && d(x, m) + d(m, z) == d(x, z))
            out.push_back(m);
    return out;
}

MedianVerdict is_median(const Graph& g) {
    if (!g.is_connected()) throw PreconditionError("graph is disconnected");
    return is_median(g, DistanceMatrix(g));
}

MedianVerdict is_median(const Graph& g, const DistanceMatrix& d) {
    if (!g.is_connected()) throw PreconditionError("graph is disconnected");
    const int n = g.vertex_count();
    for (VertexId x = 0; x < n; ++x) {
        const auto from_x = intervals_from(g, d, x);
        for (VertexId y = x + 1; y < n; ++y) {
            for (VertexId z = y + 1; z < n; ++z) {
                const Bitset common = from_x[idx(y)] & from_x[idx(z)];
                int count = 0;
                for (auto m = common.find_first(); m != Bitset::npos; m = common.find_next(m)) {
                    const auto mv = static_cast<VertexId>(m);
                    if (d(y, mv) + d(mv, z) == d(y, z)) ++count;
                }
                if (count != 1) return MedianVerdict{false, std::array<VertexId, 3>{x, y, z}, count};
            }
        }
    }
    return MedianVerdict{};
}

ConvexityVerdict is_convex(const Graph& g, const DistanceMatrix& d, const Bitset& s) {
    if (s.none()) throw PreconditionError("convexity test on an empty set");
    const int n = g.vertex_count();
    std::vector<VertexId> order(idx(n));
    std::vector<char> on(idx(n));
    for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) {
        const auto av = static_cast<VertexId>(a);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](VertexId p, VertexId q) { return d(av, p) > d(av, q); });
        // on[v]: v lies on a geodesic from a to some vertex of s.
        for (VertexId v : order) {
            on[idx(v)] = s[idx(v)];
            if (on[idx(v)]) continue;
            for (VertexId w : g.neighbors(v))
                if (d(av, w) == d(av, v) + 1 && on[idx(w)]) {
                    on[idx(v)] = 1;
                    break;
                }
        }
        for (VertexId v : order) {
            if (!on[idx(v)] || s[idx(v)]) continue;
            ConvexityVerdict out;
            out.convex = false;
            out.a = av;
            out.outside = v;
            out.geodesic = geodesic_path(g, d, av, v);
            VertexId cur = v;
            while (!s[idx(cur)]) {
                for (VertexId w : g.neighbors(cur))
                    if (d(av, w) == d(av, cur) + 1 && on[idx(w)]) {
                        cur = w;
                        break;
                    }
                out.geodesic.push_back(cur);
            }
            out.b = cur;
            return out;
        }
    }
    return ConvexityVerdict{};
}

MedianGraph::MedianGraph(Graph g) : MedianGraph(std::move(g), Options{}) {}

MedianGraph::MedianGraph(Graph g, Options options) : graph_(std::move(g)) {
    if (graph_.vertex_count() == 0) throw PreconditionError("empty graph");
    if (!graph_.is_connected()) throw PreconditionError("graph is disconnected");
    dist_ = DistanceMatrix(graph_);
    if (options.verify_median) {
        const auto verdict = is_median(graph_, dist_);
        if (!verdict.median) {
            const auto& w = *verdict.witness;
            throw PreconditionError("not a median graph: triple (" + graph_.name(w[0]) + ", " + graph_.name(w[1]) + ", " +
                                    graph_.name(w[2]) + ") has " + std::to_string(verdict.witness_median_count) +
                                    " medians");
        }
    }
    build_hyperplanes();
    if (options.verify_halfspace_convexity) {
        for (const auto& h : hyperplanes_)
            for (const Bitset* half : {&h.halfspace_a, &h.halfspace_b})
                if (!is_convex(graph_, dist_, *half).convex)
                    throw PreconditionError("halfspace of hyperplane " + std::to_string(h.id) + " is not convex");
    }
    build_transversality();
    build_cubes();
}

void MedianGraph::build_hyperplanes() {
    const int n = graph_.vertex_count();
    const int m = graph_.edge_count();
    std::vector<int> rank(idx(m)), parent(idx(m));
    boost::disjoint_sets<int*, int*> classes(rank.data(), parent.data());
    for (EdgeId e = 0; e < m; ++e) classes.make_set(e);
    // Opposite sides of every square u-v1-w-v2.
    for (VertexId u = 0; u < n; ++u) {
        const auto& nu = graph_.neighbors(u);
        for (std::size_t i = 0; i < nu.size(); ++i)
            for (std::size_t j = i + 1; j < nu.size(); ++j) {
                const VertexId v1 = nu[i], v2 = nu[j];
                for (VertexId w : graph_.neighbors(v1)) {
                    if (w == u || !graph_.adjacent(w, v2)) continue;
                    classes.union_set(*graph_.edge_between(u, v1), *graph_.edge_between(v2, w));
                    classes.union_set(*graph_.edge_between(u, v2), *graph_.edge_between(v1, w));
                }
            }
    }
    std::vector<int> class_id(idx(m), -1);
    edge_class_.assign(idx(m), -1);
    for (EdgeId e = 0; e < m; ++e) {
        const int root = classes.find_set(e);
        if (class_id[idx(root)] < 0) {
            class_id[idx(root)] = static_cast<int>(hyperplanes_.size());
            hyperplanes_.push_back(Hyperplane{});
            hyperplanes_.back().id = class_id[idx(root)];
        }
        edge_class_[idx(e)] = class_id[idx(root)];
        hyperplanes_[idx(class_id[idx(root)])].dual_edges.push_back(e);
    }
    flips_.assign(idx(n), {});
    for (auto& h : hyperplanes_) {
        Bitset cut(idx(m));
        for (EdgeId e : h.dual_edges) cut.set(idx(e));
        const Edge first = graph_.edge(h.dual_edges.front());
        h.halfspace_a = Bitset(idx(n));
        std::deque<VertexId> queue{first.u};
        h.halfspace_a.set(idx(first.u));
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : graph_.neighbors(v)) {
                if (h.halfspace_a[idx(w)] || cut[idx(*graph_.edge_between(v, w))]) continue;
                h.halfspace_a.set(idx(w));
                queue.push_back(w);
            }
        }
        h.halfspace_b = ~h.halfspace_a;
        for (EdgeId e : h.dual_edges) {
            const Edge ed = graph_.edge(e);
            if (h.halfspace_a[idx(ed.u)] == h.halfspace_a[idx(ed.v)])
                throw PreconditionError("edge class " + std::to_string(h.id) + " does not separate the graph");
        }
        // Each side must itself be connected once the class is cut.
        const VertexId start_b = static_cast<VertexId>(h.halfspace_b.find_first());
        Bitset seen(idx(n));
        seen.set(idx(start_b));
        queue.push_back(start_b);
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : graph_.neighbors(v)) {
                if (seen[idx(w)] || cut[idx(*graph_.edge_between(v, w))]) continue;
                seen.set(idx(w));
                queue.push_back(w);
            }
        }
        if (seen != h.halfspace_b)
            throw PreconditionError("edge class " + std::to_string(h.id) + " cuts the graph into more than two parts");
        for (EdgeId e : h.dual_edges) {
            const Edge ed = graph_.edge(e);
            flips_[idx(ed.u)].emplace_back(h.id, ed.v);
            flips_[idx(ed.v)].emplace_back(h.id, ed.u);
        }
    }
    for (auto& f : flips_) {
        std::sort(f.begin(), f.end());
        for (std::size_t i = 1; i < f.size(); ++i)
            if (f[i].first == f[i - 1].first)
                throw PreconditionError("vertex '" + graph_.name(static_cast<VertexId>(&f - flips_.data())) +
                                        "' meets one hyperplane twice");
    }
}

void MedianGraph::build_transversality() {
    const int hn = hyperplane_count();
    transverse_.assign(idx(hn), Bitset(idx(hn)));
    for (int h = 0; h < hn; ++h)
        for (int k = h + 1; k < hn; ++k)
            if (quarter_spaces_nonempty(h, k)) {
                transverse_[idx(h)].set(idx(k));
                transverse_[idx(k)].set(idx(h));
            }
}

bool MedianGraph::quarter_spaces_nonempty(int h, int k) const {
    if (h == k) return false;
    const auto& a = hyperplane(h);
    const auto& b = hyperplane(k);
    return a.halfspace_a.intersects(b.halfspace_a) && a.halfspace_a.intersects(b.halfspace_b) &&
           a.halfspace_b.intersects(b.halfspace_a) && a.halfspace_b.intersects(b.halfspace_b);
}

void MedianGraph::build_cubes() {
    const int n = graph_.vertex_count();
    std::set<std::vector<VertexId>> seen;
    for (VertexId x = 0; x < n; ++x) {
        const auto hs = hyperplanes_at(x);
        const std::size_t k = hs.size();
        std::vector<Bitset> adj(k, Bitset(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (transverse(hs[i], hs[j])) adj[i].set(j);
        auto emit = [&](const Bitset& clique) {
            Cube cube;
            std::vector<VertexId> verts{x};
            for (auto i = clique.find_first(); i != Bitset::npos; i = clique.find_next(i)) {
                const int h = hs[i];
                cube.crossing.push_back(h);
                const std::size_t count = verts.size();
                for (std::size_t j = 0; j < count; ++j) {
                    const auto w = flip(verts[j], h);
                    if (!w) throw std::logic_error("transverse hyperplanes at a vertex fail to span a square");
                    verts.push_back(*w);
                }
            }
            std::sort(verts.begin(), verts.end());
            std::sort(cube.crossing.begin(), cube.crossing.end());
            cube.dim = static_cast<int>(cube.crossing.size());
            if (!seen.insert(verts).second) return;
            cube.vertices = std::move(verts);
            cubes_.push_back(std::move(cube));
        };
        if (k == 0) {
            emit(Bitset(0));
            continue;
        }
        Bitset all(k);
        all.set();
        detail::for_each_maximal_clique(adj, all, emit);
    }
    std::sort(cubes_.begin(), cubes_.end(), [](const Cube& a, const Cube& b) { return a.vertices < b.vertices; });
    for (const auto& c : cubes_)
        for (int h : c.crossing) hyperplanes_[idx(h)].dimension = std::max(hyperplanes_[idx(h)].dimension, c.dim);

    for (const auto& name : graph_.names()) coneoff_.add_vertex(name);
    for (const auto& c : cubes_)
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
                if (!coneoff_.adjacent(c.vertices[i], c.vertices[j])) coneoff_.add_edge(c.vertices[i], c.vertices[j]);
    linf_ = DistanceMatrix(coneoff_);
}

int MedianGraph::hyperplane_between(VertexId u, VertexId v) const {
    const auto e = graph_.edge_between(u, v);
    if (!e) throw PreconditionError("'" + graph_.name(u) + "' and '" + graph_.name(v) + "' are not adjacent");
    return hyperplane_of_edge(*e);
}

const Bitset& MedianGraph::halfspace(int h, int which) const {
    return which == 0 ? hyperplane(h).halfspace_a : hyperplane(h).halfspace_b;
}

std::vector<int> MedianGraph::separating(VertexId x, VertexId y) const {
    std::vector<int> out;
    for (int h = 0; h < hyperplane_count(); ++h)
        if (separates(h, x, y)) out.push_back(h);
    return out;
}

bool MedianGraph::crosses(int h, const Bitset& s) const {
    return s.intersects(hyperplane(h).halfspace_a) && s.intersects(hyperplane(h).halfspace_b);
}

int MedianGraph::side_of(int h, int k) const {
    const Edge e = graph_.edge(hyperplane(k).dual_edges.front());
    return side(h, e.u);
}

bool MedianGraph::separates_hyperplanes(int h, int k, int l) const {
    if (h == k || h == l || k == l) return false;
    if (transverse(h, k) || transverse(h, l)) return false;
    return side_of(h, k) != side_of(h, l);
}

Bitset MedianGraph::carrier_vertices(int h) const {
    Bitset out(idx(vertex_count()));
    for (EdgeId e : hyperplane(h).dual_edges) {
        out.set(idx(graph_.edge(e).u));
        out.set(idx(graph_.edge(e).v));
    }
    return out;
}

std::optional<VertexId> MedianGraph::flip(VertexId v, int h) const {
    const auto& f = flips_[idx(v)];
    auto it = std::lower_bound(f.begin(), f.end(), std::make_pair(h, -1));
    if (it == f.end() || it->first != h) return std::nullopt;
    return it->second;
}

std::vector<int> MedianGraph::hyperplanes_at(VertexId v) const {
    std::vector<int> out;
    for (const auto& [h, w] : flips_[idx(v)]) out.push_back(h);
    return out;
}

VertexId MedianGraph::median(VertexId x, VertexId y, VertexId z) const {
    // Walk from x while some step approaches both y and z; the walk ends at the
    // gate of x in the interval I(y, z).
    VertexId cur = x;
    bool moved = true;
    while (moved) {
        moved = false;
        for (VertexId w : graph_.neighbors(cur))
            if (dist_(w, y) < dist_(cur, y) && dist_(w, z) < dist_(cur, z)) {
                cur = w;
                moved = true;
                break;
            }
    }
    return cur;
}

int MedianGraph::dimension() const {
    int d = 0;
    for (const auto& c : cubes_) d = std::max(d, c.dim);
    return d;
}

int MedianGraph::dist(Metric metric, VertexId x, VertexId y) const {
    if (metric == Metric::L1) return dist_(x, y);
    return linf_(x, y);
}

ChainWitness MedianGraph::disjoint_chain(VertexId x, VertexId y) const {
    auto sep = separating(x, y);
    // Halfspaces containing y, ordered by decreasing size: nested ones come first.
    std::vector<std::size_t> size(sep.size());
    for (std::size_t i = 0; i < sep.size(); ++i) size[i] = halfspace(sep[i], side(sep[i], y)).count();
    std::vector<std::size_t> order(sep.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return size[a] > size[b]; });
    std::vector<int> best(sep.size(), 1), prev(sep.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const int hi = sep[order[i]], hj = sep[order[j]];
            if (transverse(hi, hj) || size[order[j]] == size[order[i]]) continue;
            if (best[j] + 1 > best[i]) {
                best[i] = best[j] + 1;
                prev[i] = static_cast<int>(j);
            }
        }
    ChainWitness out;
    int end = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (end < 0 || best[i] > best[idx(end)]) end = static_cast<int>(i);
    for (int i = end; i >= 0; i = prev[idx(i)]) out.hyperplanes.push_back(sep[order[idx(i)]]);
    std::reverse(out.hyperplanes.begin(), out.hyperplanes.end());
    out.length = static_cast<int>(out.hyperplanes.size());
    return out;
}

std::string MedianGraph::describe_vertex_set(const Bitset& s) const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) {
        out << (first ? "" : ", ") << graph_.name(static_cast<VertexId>(v));
        first = false;
    }
    out << '}';
    return out.str();
}

Projection project(const MedianGraph& g, const Bitset& c, VertexId x) {
    if (c.none()) throw PreconditionError("projection onto an empty set");
    const auto& d = g.distances();
    Projection best;
    int ties = 0;
    for (auto y = c.find_first(); y != Bitset::npos; y = c.find_next(y)) {
        const auto yv = static_cast<VertexId>(y);
        if (best.image < 0 || d(x, yv) < best.distance) {
            best = Projection{yv, d(x, yv)};
            ties = 1;
        } else if (d(x, yv) == best.distance) {
            ++ties;
        }
    }
    if (ties != 1) throw PreconditionError("nearest vertex is not unique; the target set is not convex");
    for (int h : g.separating(x, best.image))
        if (g.halfspace(h, g.side(h, x)).intersects(c))
            throw PreconditionError("hyperplane " + std::to_string(h) + " separates x from its gate but not from the set");
    return best;
}

SetProjection project(const MedianGraph& g, const Bitset& c, const Bitset& s2) {
    SetProjection out;
    out.image = Bitset(c.size());
    for (auto y = s2.find_first(); y != Bitset::npos; y = s2.find_next(y))
        out.image.set(idx(project(g, c, static_cast<VertexId>(y)).image));
    for (int h = 0; h < g.hyperplane_count(); ++h) {
        if (g.crosses(h, out.image)) out.crossing_image.push_back(h);
        if (g.crosses(h, c) && g.crosses(h, s2)) out.crossing_both.push_back(h);
    }
    if (out.crossing_image != out.crossing_both)
        throw std::logic_error("hyperplanes crossing the gate image differ from those crossing both sets");
    return out;
}

namespace {

std::vector<int> clique_among(const MedianGraph& g, const std::vector<int>& ids, bool want_transverse) {
    const std::size_t k = ids.size();
    std::vector<Bitset> adj(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && ids[i] != ids[j] && g.transverse(ids[i], ids[j]) == want_transverse) adj[i].set(j);
    Bitset all(k);
    all.set();
    const Bitset best = k == 0 ? Bitset() : detail::maximum_clique(adj, all);
    std::vector<int> out;
    for (auto i = best.find_first(); i != Bitset::npos; i = best.find_next(i)) out.push_back(ids[i]);
    return out;
}

}  // namespace

std::vector<int> max_pairwise_disjoint(const MedianGraph& g, const std::vector<int>& ids) {
    return clique_among(g, ids, false);
}

std::vector<int> max_pairwise_transverse(const MedianGraph& g, const std::vector<int>& ids) {
    return clique_among(g, ids, true);
}

Bitset vertex_set(const Graph& g, const std::vector<VertexId>& vs) {
    Bitset out(idx(g.vertex_count()));
    for (VertexId v : vs) out.set(idx(v));
    return out;
}

std::vector<VertexId> members(const Bitset& s) {
    std::vector<VertexId> out;
    for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) out.push_back(static_cast<VertexId>(v));
    return out;
}

}  // namespace cubical
