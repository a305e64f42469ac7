#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

using cubical::Graph;

namespace {

std::vector<std::vector<bool>> adjacency(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }
    return a;
}

int at(const Matrix& d, int a, int b) { return d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

bool between(const Matrix& d, int x, int m, int y) { return at(d, x, m) + at(d, m, y) == at(d, x, y); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Matrix floyd(const Graph& g) {
    const int n = g.vertex_count();
    constexpr int inf = 1 << 28;
    Matrix d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    for (const auto& e : g.edges()) {
        d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    for (std::size_t k = 0; k < d.size(); ++k)
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf) x = -1;
    return d;
}

int median_count(const Matrix& d, int x, int y, int z) {
    int count = 0;
    for (int m = 0; m < static_cast<int>(d.size()); ++m)
        if (between(d, x, m, y) && between(d, y, m, z) && between(d, x, m, z)) ++count;
    return count;
}

bool all_triples_unique_median(const Matrix& d) {
    const int n = static_cast<int>(d.size());
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            for (int z = y; z < n; ++z)
                if (median_count(d, x, y, z) != 1) return false;
    return true;
}

std::vector<ThetaClass> theta_classes(const Graph& g, const Matrix& d) {
    const auto& es = g.edges();
    const int m = static_cast<int>(es.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const int u = es[static_cast<std::size_t>(i)].u, v = es[static_cast<std::size_t>(i)].v;
            const int x = es[static_cast<std::size_t>(j)].u, y = es[static_cast<std::size_t>(j)].v;
            if (at(d, u, x) + at(d, v, y) != at(d, u, y) + at(d, v, x)) uf.unite(i, j);
        }
    std::vector<int> slot(static_cast<std::size_t>(m), -1);
    std::vector<ThetaClass> out;
    for (int i = 0; i < m; ++i) {
        const int r = uf.find(i);
        if (slot[static_cast<std::size_t>(r)] < 0) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
            ThetaClass c;
            const int u = es[static_cast<std::size_t>(i)].u, v = es[static_cast<std::size_t>(i)].v;
            for (int w = 0; w < g.vertex_count(); ++w) c.side_u.push_back(at(d, w, u) < at(d, w, v));
            out.push_back(std::move(c));
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].edges.push_back(
            {es[static_cast<std::size_t>(i)].u, es[static_cast<std::size_t>(i)].v});
    }
    return out;
}

bool transverse(const ThetaClass& a, const ThetaClass& b) {
    bool seen[2][2] = {{false, false}, {false, false}};
    for (std::size_t w = 0; w < a.side_u.size(); ++w) seen[a.side_u[w] ? 1 : 0][b.side_u[w] ? 1 : 0] = true;
    return seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1];
}

namespace {

// Side of h holding every edge of k, or -1 when k's endpoints meet both sides.
int side_holding(const ThetaClass& h, const ThetaClass& k) {
    bool in[2] = {false, false};
    for (const auto& [a, b] : k.edges) {
        in[h.side_u[static_cast<std::size_t>(a)] ? 1 : 0] = true;
        in[h.side_u[static_cast<std::size_t>(b)] ? 1 : 0] = true;
    }
    if (in[0] && in[1]) return -1;
    return in[1] ? 1 : 0;
}

}  // namespace

GridFront brute_grid(const Graph& g, const Matrix& d) {
    const auto cls = theta_classes(g, d);
    const int m = static_cast<int>(cls.size());
    if (m > 16) throw std::invalid_argument("brute_grid: too many classes");
    std::vector<std::uint32_t> cross(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && transverse(cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(j)]))
                cross[static_cast<std::size_t>(i)] |= 1u << j;
    // holds[h][k]: side of h containing k (k disjoint from h).
    std::vector<std::vector<int>> holds(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
    for (int h = 0; h < m; ++h)
        for (int k = 0; k < m; ++k)
            if (h != k) holds[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)] = side_holding(cls[static_cast<std::size_t>(h)], cls[static_cast<std::size_t>(k)]);
    auto separates = [&](int h, int k, int l) {
        const int a = holds[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
        const int b = holds[static_cast<std::size_t>(h)][static_cast<std::size_t>(l)];
        return a >= 0 && b >= 0 && a != b;
    };
    // A set of pairwise disjoint classes is a chain iff every triple has a
    // member separating the other two.
    const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    std::vector<bool> chain(static_cast<std::size_t>(full) + 1, false);
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::vector<int> ids;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1u) ids.push_back(i);
        bool ok = true;
        for (int i : ids)
            if (cross[static_cast<std::size_t>(i)] & s) ok = false;
        for (std::size_t a = 0; ok && a < ids.size(); ++a)
            for (std::size_t b = a + 1; ok && b < ids.size(); ++b)
                for (std::size_t c = b + 1; ok && c < ids.size(); ++c) {
                    const int x = ids[a], y = ids[b], z = ids[c];
                    ok = separates(x, y, z) || separates(y, x, z) || separates(z, x, y);
                }
        chain[s] = ok;
    }
    // best[s]: largest chain inside s.
    std::vector<int> best(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int b = chain[s] ? std::popcount(s) : 0;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1u) b = std::max(b, best[s & ~(1u << i)]);
        best[s] = b;
    }
    std::vector<std::pair<int, int>> found;
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (!chain[s]) continue;
        std::uint32_t t = full & ~s;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1u) t &= cross[static_cast<std::size_t>(i)];
        const int p = std::popcount(s), q = best[t];
        if (q == 0) continue;
        found.push_back({std::max(p, q), std::min(p, q)});
    }
    GridFront out;
    for (const auto& a : found) {
        bool dominated = false;
        for (const auto& b : found)
            if (b != a && b.first >= a.first && b.second >= a.second) dominated = true;
        if (!dominated && std::find(out.pareto.begin(), out.pareto.end(), a) == out.pareto.end()) out.pareto.push_back(a);
        out.thinness = std::max(out.thinness, a.second);
    }
    std::sort(out.pareto.begin(), out.pareto.end());
    return out;
}

int brute_rectangle_thickness(const Graph& g, const Matrix& d) {
    const auto adj = adjacency(g);
    const int n = g.vertex_count();
    auto embeds = [&](int side) {
        const int w = side + 1;
        std::vector<int> f(static_cast<std::size_t>(w * w), -1);
        std::function<bool(int)> place = [&](int pos) -> bool {
            if (pos == w * w) return true;
            const int i = pos / w, j = pos % w;
            for (int v = 0; v < n; ++v) {
                if (pos > 0) {
                    const int prev = j > 0 ? f[static_cast<std::size_t>(pos - 1)] : f[static_cast<std::size_t>(pos - w)];
                    if (!adj[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)]) continue;
                }
                bool ok = true;
                for (int q = 0; ok && q < pos; ++q) {
                    const int qi = q / w, qj = q % w;
                    ok = at(d, f[static_cast<std::size_t>(q)], v) == std::abs(qi - i) + std::abs(qj - j);
                }
                if (!ok) continue;
                f[static_cast<std::size_t>(pos)] = v;
                if (place(pos + 1)) return true;
            }
            return false;
        };
        return place(0);
    };
    int l = 0;
    while (embeds(l + 1)) ++l;
    return l;
}

std::vector<std::vector<int>> all_geodesics(const Graph& g, const Matrix& d, int a, int b) {
    const auto adj = adjacency(g);
    std::vector<std::vector<int>> out;
    std::vector<int> path{a};
    std::function<void(int)> walk = [&](int v) {
        if (v == b) {
            out.push_back(path);
            return;
        }
        for (int w = 0; w < g.vertex_count(); ++w)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] && at(d, w, b) == at(d, v, b) - 1) {
                path.push_back(w);
                walk(w);
                path.pop_back();
            }
    };
    walk(a);
    return out;
}

int brute_bigon(const Graph& g, const Matrix& d, const Matrix& measure) {
    int best = 0;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto geos = all_geodesics(g, d, a, b);
            for (std::size_t i = 0; i < geos.size(); ++i)
                for (std::size_t j = i + 1; j < geos.size(); ++j) {
                    auto one_way = [&](const std::vector<int>& p, const std::vector<int>& q) {
                        int worst = 0;
                        for (int x : p) {
                            int near = 1 << 28;
                            for (int y : q) near = std::min(near, at(measure, x, y));
                            worst = std::max(worst, near);
                        }
                        return worst;
                    };
                    best = std::max({best, one_way(geos[i], geos[j]), one_way(geos[j], geos[i])});
                }
        }
    return best;
}

int brute_twice_delta(const Matrix& d) {
    const int n = static_cast<int>(d.size());
    int best = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    int s[3] = {at(d, x, y) + at(d, z, w), at(d, x, z) + at(d, y, w), at(d, x, w) + at(d, y, z)};
                    std::sort(s, s + 3);
                    best = std::max(best, s[2] - s[1]);
                }
    return best;
}

Matrix brute_linf(const Graph& g, const Matrix& d) {
    const int n = g.vertex_count();
    Graph cone;
    for (int v = 0; v < n; ++v) cone.add_vertex(g.name(v));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const int k = at(d, x, y);
            if (k >= 20) continue;
            long interval = 0;
            for (int m = 0; m < n; ++m) interval += between(d, x, m, y) ? 1 : 0;
            if (interval == (1L << k)) cone.add_edge(x, y);
        }
    return floyd(cone);
}

long brute_cycles_through(const Graph& g, int u, int v, int length) {
    const auto adj = adjacency(g);
    const int n = g.vertex_count();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
    long count = 0;
    // Sequence v, w_1, ..., w_{length-2}, u.
    std::function<void(int, int)> extend = [&](int last, int placed) {
        if (placed == length - 2) {
            if (adj[static_cast<std::size_t>(last)][static_cast<std::size_t>(u)]) ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || !adj[static_cast<std::size_t>(last)][static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = true;
            extend(w, placed + 1);
            used[static_cast<std::size_t>(w)] = false;
        }
    };
    if (length >= 3) extend(v, 0);
    return count;
}

std::vector<int> coxeter_reduce(const Graph& gamma, std::vector<int> word) {
    const auto adj = adjacency(gamma);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < word.size() && !changed; ++i) {
            const int s = word[i];
            for (std::size_t j = i + 1; j < word.size(); ++j) {
                if (word[j] == s) {
                    word.erase(word.begin() + static_cast<long>(j));
                    word.erase(word.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
                if (!adj[static_cast<std::size_t>(s)][static_cast<std::size_t>(word[j])]) break;
            }
        }
    }
    return word;
}

bool coxeter_equal(const Graph& gamma, const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> w = u;
    w.insert(w.end(), v.rbegin(), v.rend());
    return coxeter_reduce(gamma, w).empty();
}

std::vector<std::vector<int>> brute_induced_squares(const Graph& gamma) {
    const auto adj = adjacency(gamma);
    const int n = gamma.vertex_count();
    std::vector<std::vector<int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int e = c + 1; e < n; ++e) {
                    const int vs[4] = {a, b, c, e};
                    int edges = 0;
                    bool degree_two = true;
                    for (int i = 0; i < 4; ++i) {
                        int deg = 0;
                        for (int j = 0; j < 4; ++j)
                            if (i != j && adj[static_cast<std::size_t>(vs[i])][static_cast<std::size_t>(vs[j])]) ++deg;
                        degree_two = degree_two && deg == 2;
                        edges += deg;
                    }
                    if (degree_two && edges == 8) out.push_back({a, b, c, e});
                }
    return out;
}

}  // namespace oracle
