#include "cubical/diag.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cubical/generators.hpp"

namespace cubical {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Halfspaces as nodes (2h + side), ordered by strict containment. A path in
// this order is a chain of pairwise disjoint, consecutively separating
// hyperplanes.
class HalfspaceOrder {
public:
    explicit HalfspaceOrder(const MedianGraph& g) : g_(g), nodes_(2 * g.hyperplane_count()) {
        const std::size_t n = idx(nodes_);
        size_.resize(n);
        for (int v = 0; v < nodes_; ++v) size_[idx(v)] = half(v).count();
        below_.assign(n, Bitset(n));
        for (int v = 0; v < nodes_; ++v)
            for (int w = 0; w < nodes_; ++w)
                if (v / 2 != w / 2 && size_[idx(w)] < size_[idx(v)] && half(w).is_subset_of(half(v))) below_[idx(v)].set(idx(w));
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return size_[idx(a)] > size_[idx(b)]; });
        longest_.assign(n, 1);
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            const Bitset& bl = below_[idx(*it)];
            for (auto w = bl.find_first(); w != Bitset::npos; w = bl.find_next(w))
                longest_[idx(*it)] = std::max(longest_[idx(*it)], 1 + longest_[w]);
        }
    }

    int nodes() const { return nodes_; }
    const Bitset& below(int v) const { return below_[idx(v)]; }
    int longest_from(int v) const { return longest_[idx(v)]; }

    // Longest chain using only hyperplanes in `allowed`.
    std::vector<int> longest_chain(const Bitset& allowed) const {
        std::vector<int> nodes;
        for (int v : order_)
            if (allowed[idx(v / 2)]) nodes.push_back(v);
        std::vector<int> best(nodes.size(), 1), prev(nodes.size(), -1);
        int end = -1;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (below_[idx(nodes[j])][idx(nodes[i])] && best[j] + 1 > best[i]) {
                    best[i] = best[j] + 1;
                    prev[i] = static_cast<int>(j);
                }
            if (end < 0 || best[i] > best[idx(end)]) end = static_cast<int>(i);
        }
        std::vector<int> chain;
        for (int i = end; i >= 0; i = prev[idx(i)]) chain.push_back(nodes[idx(i)] / 2);
        std::reverse(chain.begin(), chain.end());
        return chain;
    }

private:
    const Bitset& half(int v) const { return g_.halfspace(v / 2, v % 2); }

    const MedianGraph& g_;
    int nodes_;
    std::vector<std::size_t> size_;
    std::vector<Bitset> below_;
    std::vector<int> order_;
    std::vector<int> longest_;
};

struct Pareto {
    std::vector<std::pair<int, int>> points;
    std::vector<Grid> grids;

    bool dominated(int p, int q) const {
        const int hi = std::max(p, q), lo = std::min(p, q);
        return std::any_of(points.begin(), points.end(), [&](const auto& pt) { return pt.first >= hi && pt.second >= lo; });
    }

    void add(Grid grid) {
        const int p = static_cast<int>(grid.verticals.size()), q = static_cast<int>(grid.horizontals.size());
        if (dominated(p, q)) return;
        if (p < q) std::swap(grid.verticals, grid.horizontals);
        const int hi = std::max(p, q), lo = std::min(p, q);
        for (std::size_t i = points.size(); i-- > 0;)
            if (points[i].first <= hi && points[i].second <= lo) {
                points.erase(points.begin() + static_cast<long>(i));
                grids.erase(grids.begin() + static_cast<long>(i));
            }
        points.emplace_back(hi, lo);
        grids.push_back(std::move(grid));
    }
};

class GridSearcher {
public:
    GridSearcher(const MedianGraph& g, long cap) : g_(g), order_(g), cap_(cap) {}

    GridSearch run() {
        Bitset all(idx(g_.hyperplane_count()));
        all.set();
        // Start nodes in decreasing chain potential so large grids appear early.
        std::vector<int> starts(idx(order_.nodes()));
        std::iota(starts.begin(), starts.end(), 0);
        std::stable_sort(starts.begin(), starts.end(),
                         [&](int a, int b) { return order_.longest_from(a) > order_.longest_from(b); });
        for (int s : starts) {
            if (stopped_) break;
            std::vector<int> chain;
            extend(s, chain, all);
        }
        GridSearch out;
        out.pareto = pareto_.points;
        out.witnesses = pareto_.grids;
        std::vector<std::size_t> order(out.pareto.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.pareto[a] > out.pareto[b]; });
        GridSearch sorted;
        for (std::size_t i : order) {
            sorted.pareto.push_back(out.pareto[i]);
            sorted.witnesses.push_back(out.witnesses[i]);
            sorted.thinness = std::max(sorted.thinness, out.pareto[i].second);
        }
        sorted.lower_bound = stopped_;
        sorted.nodes = nodes_;
        return sorted;
    }

private:
    void extend(int node, std::vector<int>& chain, const Bitset& candidates) {
        if (stopped_) return;
        if (++nodes_ > cap_) {
            stopped_ = true;
            return;
        }
        const Bitset cand = candidates & g_.transverse_set(node / 2);
        if (cand.none()) return;
        chain.push_back(node / 2);
        const auto horizontals = order_.longest_chain(cand);
        const int p = static_cast<int>(chain.size()), q = static_cast<int>(horizontals.size());
        pareto_.add(Grid{chain, horizontals});
        const Bitset& next = order_.below(node);
        for (auto w = next.find_first(); w != Bitset::npos; w = next.find_next(w)) {
            const int p_bound = p + order_.longest_from(static_cast<int>(w));
            if (pareto_.dominated(p_bound, q)) continue;
            extend(static_cast<int>(w), chain, cand);
            if (stopped_) break;
        }
        chain.pop_back();
    }

    const MedianGraph& g_;
    HalfspaceOrder order_;
    Pareto pareto_;
    long cap_;
    long nodes_ = 0;
    bool stopped_ = false;
};

}  // namespace

bool is_chain(const MedianGraph& g, const std::vector<int>& hs) {
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (hs[i] == hs[j] || g.transverse(hs[i], hs[j])) return false;
    for (std::size_t i = 1; i + 1 < hs.size(); ++i)
        if (!g.separates_hyperplanes(hs[i], hs[i - 1], hs[i + 1])) return false;
    return true;
}

bool is_grid(const MedianGraph& g, const Grid& grid, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (grid.verticals.empty() || grid.horizontals.empty()) return fail("empty family");
    if (!is_chain(g, grid.verticals)) return fail("verticals do not form a chain");
    if (!is_chain(g, grid.horizontals)) return fail("horizontals do not form a chain");
    for (int v : grid.verticals)
        for (int h : grid.horizontals)
            if (!g.quarter_spaces_nonempty(v, h))
                return fail("hyperplanes " + std::to_string(v) + " and " + std::to_string(h) + " are not transverse");
    return true;
}

GridSearch max_grid(const MedianGraph& g, long cap) {
    GridSearch out = GridSearcher(g, cap).run();
    for (const auto& w : out.witnesses) {
        std::string why;
        if (!is_grid(g, w, &why)) throw std::logic_error("grid witness fails re-check: " + why);
    }
    return out;
}

std::optional<Grid> grid_through(const MedianGraph& g, int h, int n, long cap, bool* capped) {
    if (capped) *capped = false;
    if (n <= 0) throw std::invalid_argument("grid size must be positive");
    HalfspaceOrder order(g);
    const int target = 2 * h;
    long nodes = 0;
    std::optional<Grid> found;
    Bitset all(idx(g.hyperplane_count()));
    all.set();

    std::vector<int> chain;
    std::function<void(int, bool, const Bitset&)> go = [&](int node, bool passed, const Bitset& candidates) {
        if (found || (capped && *capped)) return;
        if (++nodes > cap) {
            if (capped) *capped = true;
            return;
        }
        const Bitset cand = candidates & g.transverse_set(node / 2);
        auto horizontals = order.longest_chain(cand);
        if (cand.none() || static_cast<int>(horizontals.size()) < n) return;
        passed = passed || node == target;
        chain.push_back(node / 2);
        const int len = static_cast<int>(chain.size());
        if (len == n && passed) {
            horizontals.resize(idx(n));
            found = Grid{chain, horizontals};
        } else if (len < n && order.longest_from(node) - 1 >= n - len) {
            const Bitset& next = order.below(node);
            for (auto w = next.find_first(); w != Bitset::npos && !found; w = next.find_next(w)) {
                const int wi = static_cast<int>(w);
                if (!passed && wi != target && !order.below(wi)[idx(target)]) continue;
                go(wi, passed, cand);
            }
        }
        chain.pop_back();
    };
    for (int s = 0; s < order.nodes() && !found; ++s)
        if (s == target || order.below(s)[idx(target)]) go(s, false, all);
    if (found) {
        std::string why;
        if (!is_grid(g, *found, &why)) throw std::logic_error("grid witness fails re-check: " + why);
    }
    return found;
}

bool is_flat_rectangle(const Graph& g, const DistanceMatrix& d, const FlatRectangle& r) {
    if (r.a < 1 || r.b < 1) return false;
    if (r.embedding.size() != idx((r.a + 1) * (r.b + 1))) return false;
    for (VertexId v : r.embedding)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (int i = 0; i <= r.a; ++i)
        for (int j = 0; j <= r.b; ++j)
            for (int k = 0; k <= r.a; ++k)
                for (int l = 0; l <= r.b; ++l)
                    if (d(r.at(i, j), r.at(k, l)) != std::abs(i - k) + std::abs(j - l)) return false;
    return true;
}

FlatRectangle rectangle_from_corners(const MedianGraph& g, VertexId x0, VertexId u, VertexId w) {
    const auto& d = g.distances();
    const auto row = geodesic_path(g.graph(), d, x0, u);
    const auto col = geodesic_path(g.graph(), d, x0, w);
    std::vector<int> col_planes;
    for (std::size_t j = 1; j < col.size(); ++j) col_planes.push_back(g.hyperplane_between(col[j - 1], col[j]));
    FlatRectangle r;
    r.a = d(x0, u);
    r.b = d(x0, w);
    r.embedding.resize(idx((r.a + 1) * (r.b + 1)));
    for (int i = 0; i <= r.a; ++i) {
        VertexId cur = row[idx(i)];
        r.embedding[idx(i * (r.b + 1))] = cur;
        for (int j = 1; j <= r.b; ++j) {
            const auto next = g.flip(cur, col_planes[idx(j - 1)]);
            if (!next) throw PreconditionError("corner triple does not span a flat rectangle");
            cur = *next;
            r.embedding[idx(i * (r.b + 1) + j)] = cur;
        }
    }
    return r;
}

namespace {

// For a fixed corner x0: the hyperplanes separating x0 from each vertex, and
// the hyperplanes transverse to all of them.
void corner_tables(const MedianGraph& g, VertexId x0, std::vector<Bitset>& sep, std::vector<Bitset>& cross) {
    const int n = g.vertex_count();
    const std::size_t hn = idx(g.hyperplane_count());
    const auto& d = g.distances();
    sep.assign(idx(n), Bitset(hn));
    cross.assign(idx(n), Bitset(hn));
    std::vector<VertexId> order(idx(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return d(x0, a) < d(x0, b); });
    for (VertexId v : order) {
        if (v == x0) {
            cross[idx(v)].set();
            continue;
        }
        for (VertexId p : g.graph().neighbors(v))
            if (d(x0, p) == d(x0, v) - 1) {
                const int h = g.hyperplane_between(p, v);
                sep[idx(v)] = sep[idx(p)];
                sep[idx(v)].set(idx(h));
                cross[idx(v)] = cross[idx(p)] & g.transverse_set(h);
                break;
            }
    }
}

}  // namespace

void for_each_rectangle_corner(const MedianGraph& g, int min_side,
                               const std::function<void(VertexId, VertexId, VertexId)>& visit) {
    const int n = g.vertex_count();
    const auto& d = g.distances();
    std::vector<Bitset> sep, cross;
    for (VertexId x0 = 0; x0 < n; ++x0) {
        corner_tables(g, x0, sep, cross);
        for (VertexId u = 0; u < n; ++u) {
            if (u == x0 || d(x0, u) < min_side) continue;
            for (VertexId w = u + 1; w < n; ++w) {
                if (w == x0 || d(x0, w) < min_side) continue;
                if (sep[idx(w)].is_subset_of(cross[idx(u)])) visit(x0, u, w);
            }
        }
    }
}

RectangleSearch max_thick_rectangle(const MedianGraph& g) {
    RectangleSearch out;
    const int n = g.vertex_count();
    const auto& d = g.distances();
    VertexId bx = -1, bu = -1, bw = -1;
    std::vector<Bitset> sep, cross;
    for (VertexId x0 = 0; x0 < n; ++x0) {
        corner_tables(g, x0, sep, cross);
        for (VertexId u = 0; u < n; ++u) {
            if (d(x0, u) <= out.thickness) continue;
            for (VertexId w = u + 1; w < n; ++w) {
                if (d(x0, w) <= out.thickness || !sep[idx(w)].is_subset_of(cross[idx(u)])) continue;
                out.thickness = std::min(d(x0, u), d(x0, w));
                bx = x0;
                bu = u;
                bw = w;
                if (d(x0, u) <= out.thickness) break;
            }
        }
    }
    if (bx >= 0) {
        out.witness = rectangle_from_corners(g, bx, bu, bw);
        if (!is_flat_rectangle(g.graph(), d, *out.witness)) throw std::logic_error("rectangle witness fails isometry re-check");
    }
    return out;
}

FlatRectangle hypercube_rectangle(const Graph& cube, int n) {
    const int p = n / 2, q = n - p;
    FlatRectangle r;
    r.a = p;
    r.b = q;
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
            std::uint32_t mask = 0;
            for (int k = 0; k < i; ++k) mask |= 1u << k;
            for (int k = 0; k < j; ++k) mask |= 1u << (p + k);
            r.embedding.push_back(cube.at(gen::cube_name(mask, n)));
        }
    return r;
}

int max_rectangle_diameter(const MedianGraph& g, const DistanceMatrix& measure, int min_side) {
    const auto& d = g.distances();
    int best = 0;
    auto interval = [&](VertexId a, VertexId b) {
        std::vector<VertexId> out;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (d(a, v) + d(v, b) == d(a, b)) out.push_back(v);
        return out;
    };
    for_each_rectangle_corner(g, min_side, [&](VertexId x0, VertexId u, VertexId w) {
        const auto rect = rectangle_from_corners(g, x0, u, w);
        const VertexId z = rect.at(rect.a, rect.b);
        const auto as = interval(x0, u), bs = interval(x0, w);
        std::vector<VertexId> at(as.size() * bs.size());
        for (std::size_t i = 0; i < as.size(); ++i)
            for (std::size_t j = 0; j < bs.size(); ++j) at[i * bs.size() + j] = g.median(as[i], bs[j], z);
        auto comparable = [&](VertexId p, VertexId q) {
            return d(x0, p) + d(p, q) == d(x0, q) || d(x0, q) + d(q, p) == d(x0, p);
        };
        for (std::size_t i1 = 0; i1 < as.size(); ++i1)
            for (std::size_t i2 = i1; i2 < as.size(); ++i2) {
                if (!comparable(as[i1], as[i2])) continue;
                for (std::size_t j1 = 0; j1 < bs.size(); ++j1)
                    for (std::size_t j2 = 0; j2 < bs.size(); ++j2) {
                        if (!comparable(bs[j1], bs[j2])) continue;
                        best = std::max(best, measure(at[i1 * bs.size() + j1], at[i2 * bs.size() + j2]));
                    }
            }
    });
    return best;
}

DeltaResult delta(const DistanceMatrix& d, const DeltaOptions& options) {
    const int n = d.size();
    DeltaResult out;
    auto consider = [&](VertexId x, VertexId y, VertexId z, VertexId w) {
        int s[3] = {d(x, y) + d(z, w), d(x, z) + d(y, w), d(x, w) + d(y, z)};
        std::sort(s, s + 3);
        if (s[2] - s[1] > out.twice_delta) {
            out.twice_delta = s[2] - s[1];
            out.witness = {x, y, z, w};
        }
    };
    if (n > options.max_vertices) {
        if (!options.sample)
            throw PreconditionError("delta: " + std::to_string(n) + " vertices exceed the exact-scan limit of " +
                                    std::to_string(options.max_vertices));
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (long i = 0; i < options.samples; ++i) consider(pick(rng), pick(rng), pick(rng), pick(rng));
        out.lower_bound = true;
        return out;
    }
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y = x + 1; y < n; ++y)
            for (VertexId z = y + 1; z < n; ++z)
                for (VertexId w = z + 1; w < n; ++w) consider(x, y, z, w);
    return out;
}

DeltaResult delta(const MedianGraph& g, Metric metric, const DeltaOptions& options) {
    return delta(metric == Metric::L1 ? g.distances() : g.linf_distances(), options);
}

int hausdorff(const DistanceMatrix& d, const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    auto one_side = [&](const std::vector<VertexId>& p, const std::vector<VertexId>& q) {
        int worst = 0;
        for (VertexId u : p) {
            int nearest = -1;
            for (VertexId v : q)
                if (nearest < 0 || d(u, v) < nearest) nearest = d(u, v);
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(one_side(a, b), one_side(b, a));
}

BigonResult bigon_thinness(const Graph& geo_graph, const DistanceMatrix& geo, const DistanceMatrix& measure,
                           int max_vertices) {
    const int n = geo_graph.vertex_count();
    if (n > max_vertices)
        throw PreconditionError("bigon scan: " + std::to_string(n) + " vertices exceed the limit of " +
                                std::to_string(max_vertices));
    BigonResult out;
    std::vector<VertexId> order(idx(n));
    std::vector<int> f(idx(n)), arg(idx(n));
    // f[v]: over geodesics x -> v, the largest possible minimum distance to `a`.
    auto sweep = [&](VertexId x, VertexId a) {
        for (VertexId v : order) {
            const int own = measure(a, v);
            if (v == x) {
                f[idx(v)] = own;
                arg[idx(v)] = -1;
                continue;
            }
            int best = -1;
            for (VertexId p : geo_graph.neighbors(v))
                if (geo(x, p) == geo(x, v) - 1 && f[idx(p)] > best) {
                    best = f[idx(p)];
                    arg[idx(v)] = p;
                }
            f[idx(v)] = std::min(own, best);
        }
    };
    for (VertexId x = 0; x < n; ++x) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return geo(x, a) < geo(x, b); });
        for (VertexId a = 0; a < n; ++a) {
            sweep(x, a);
            for (VertexId y = 0; y < n; ++y)
                if (geo(x, a) + geo(a, y) == geo(x, y) && f[idx(y)] > out.thinness) {
                    out.thinness = f[idx(y)];
                    out.x = x;
                    out.y = y;
                    out.far = a;
                }
        }
    }
    if (out.x < 0) return out;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return geo(out.x, a) < geo(out.x, b); });
    sweep(out.x, out.far);
    for (VertexId v = out.y; v >= 0; v = arg[idx(v)]) out.second.push_back(v);
    std::reverse(out.second.begin(), out.second.end());
    out.first = geodesic_path(geo_graph, geo, out.x, out.far);
    const auto tail = geodesic_path(geo_graph, geo, out.far, out.y);
    out.first.insert(out.first.end(), tail.begin() + 1, tail.end());
    return out;
}

BigonResult bigon_thinness(const MedianGraph& g, Metric metric, int max_vertices) {
    return bigon_thinness(g.graph(), g.distances(), metric == Metric::L1 ? g.distances() : g.linf_distances(),
                          max_vertices);
}

}  // namespace cubical
