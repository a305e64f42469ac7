#include "cubical/polygonal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/pending/disjoint_sets.hpp>

#include "cliques.hpp"
#include "cubical/io.hpp"

namespace cubical::poly {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

int cyc(int i, int m) { return ((i % m) + m) % m; }

// Walk direction of side s: tail then head.
VertexId tail(const PolygonalComplex& x, const Side& s) {
    const auto& e = x.edges[idx(s.edge)];
    return s.forward ? e.a : e.b;
}
VertexId head(const PolygonalComplex& x, const Side& s) {
    const auto& e = x.edges[idx(s.edge)];
    return s.forward ? e.b : e.a;
}

constexpr int kDualVertexCap = 200000;

}  // namespace

RawComplex parse_complex(std::string_view text) {
    RawComplex raw;
    io::for_each_line(text, [&](const std::vector<io::Token>& t, std::size_t line) {
        const std::string& kw = t[0].text;
        if (kw == "vertex") {
            if (t.size() != 2) throw InputError("expected 'vertex <id>'", line, t[0].column);
            raw.vertices.push_back({t[1].text, line});
        } else if (kw == "edge") {
            if (t.size() != 4) throw InputError("expected 'edge <id> <vertex> <vertex>'", line, t[0].column);
            raw.edges.push_back({t[1].text, t[2].text, t[3].text, line});
        } else if (kw == "polygon") {
            if (t.size() < 3 || t[2].text != ":")
                throw InputError("expected 'polygon <id> : <signed edges>'", line, t[0].column);
            RawComplex::RawPolygon p{t[1].text, {}, line};
            for (std::size_t i = 3; i < t.size(); ++i) {
                std::string s = t[i].text;
                bool forward = true;
                if (s[0] == '+' || s[0] == '-') {
                    forward = s[0] == '+';
                    s.erase(0, 1);
                }
                if (s.empty()) throw InputError("missing edge name after sign", line, t[i].column);
                p.sides.push_back({s, forward, t[i].column});
            }
            raw.polygons.push_back(std::move(p));
        } else {
            throw InputError("unknown keyword '" + kw + "'", line, t[0].column);
        }
    });
    return raw;
}

VertexId PolygonalComplex::vertex(std::string_view name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        if (vertex_names[i] == name) return static_cast<VertexId>(i);
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

EdgeId PolygonalComplex::edge(std::string_view name) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return static_cast<EdgeId>(i);
    throw InputError("unknown edge '" + std::string(name) + "'");
}

int PolygonalComplex::polygon(std::string_view name) const {
    for (std::size_t i = 0; i < polygons.size(); ++i)
        if (polygons[i].name == name) return static_cast<int>(i);
    throw InputError("unknown polygon '" + std::string(name) + "'");
}

Bitset PolygonalComplex::polygon_vertices(int p) const {
    Bitset s(idx(vertex_count()));
    for (VertexId v : polygons[idx(p)].boundary) s.set(idx(v));
    return s;
}

std::vector<std::vector<std::pair<VertexId, EdgeId>>> PolygonalComplex::adjacency() const {
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(idx(vertex_count()));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[idx(edges[e].a)].push_back({edges[e].b, static_cast<EdgeId>(e)});
        adj[idx(edges[e].b)].push_back({edges[e].a, static_cast<EdgeId>(e)});
    }
    return adj;
}

PolygonalComplex validate_complex(const RawComplex& raw) {
    PolygonalComplex x;
    std::unordered_map<std::string, VertexId> vindex;
    for (const auto& v : raw.vertices) {
        if (!vindex.emplace(v.name, x.vertex_count()).second)
            throw InputError("duplicate vertex '" + v.name + "'", v.line);
        x.vertex_names.push_back(v.name);
    }
    if (x.vertex_names.empty()) throw InputError("complex has no vertices");

    std::unordered_map<std::string, EdgeId> eindex;
    for (const auto& e : raw.edges) {
        if (!eindex.emplace(e.name, x.edge_count()).second)
            throw InputError("duplicate edge '" + e.name + "'", e.line);
        for (const auto* end : {&e.a, &e.b})
            if (!vindex.count(*end))
                throw InputError("edge '" + e.name + "' references undeclared vertex '" + *end + "'", e.line);
        if (e.a == e.b) throw InputError("edge '" + e.name + "' is a loop", e.line);
        x.edges.push_back(PolyEdge{e.name, vindex[e.a], vindex[e.b], {}});
    }

    std::set<std::string> pnames;
    std::map<std::vector<EdgeId>, std::string> boundaries;
    for (const auto& rp : raw.polygons) {
        if (!pnames.insert(rp.name).second) throw InputError("duplicate polygon '" + rp.name + "'", rp.line);
        Polygon p;
        p.name = rp.name;
        for (const auto& s : rp.sides) {
            auto it = eindex.find(s.edge);
            if (it == eindex.end())
                throw InputError("polygon '" + rp.name + "' references undeclared edge '" + s.edge + "'", rp.line,
                                 s.column);
            p.sides.push_back(Side{it->second, s.forward});
        }
        const int m = p.length();
        if (m < 4 || m % 2 != 0)
            throw InputError("polygon '" + rp.name + "' has " + std::to_string(m) +
                                 " sides; polygons need an even number of at least 4",
                             rp.line);
        for (int i = 0; i < m; ++i) {
            const Side& s = p.sides[idx(i)];
            const Side& next = p.sides[idx(cyc(i + 1, m))];
            if (head(x, s) != tail(x, next))
                throw InputError("polygon '" + rp.name + "': side " + std::to_string(i + 1) + " ends at '" +
                                     x.vertex_names[idx(head(x, s))] + "' but the next side starts at '" +
                                     x.vertex_names[idx(tail(x, next))] + "'",
                                 rp.line, rp.sides[idx(cyc(i + 1, m))].column);
            p.boundary.push_back(tail(x, s));
        }
        std::set<VertexId> seen;
        for (VertexId v : p.boundary)
            if (!seen.insert(v).second)
                throw InputError("polygon '" + rp.name + "' does not embed: vertex '" + x.vertex_names[idx(v)] +
                                     "' repeats on its boundary",
                                 rp.line);
        std::vector<EdgeId> key;
        for (const Side& s : p.sides) key.push_back(s.edge);
        std::sort(key.begin(), key.end());
        auto [it, fresh] = boundaries.emplace(key, rp.name);
        if (!fresh)
            throw InputError("polygons '" + it->second + "' and '" + rp.name + "' have the same boundary", rp.line);
        const int pid = x.polygon_count();
        for (const Side& s : p.sides) x.edges[idx(s.edge)].polygons.push_back(pid);
        x.polygons.push_back(std::move(p));
    }

    const auto adj = x.adjacency();
    std::vector<char> seen(idx(x.vertex_count()), 0);
    std::deque<VertexId> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[idx(v)])
            if (!seen[idx(w)]) {
                seen[idx(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    if (reached != x.vertex_count()) {
        const auto far = std::find(seen.begin(), seen.end(), 0) - seen.begin();
        throw InputError("complex is disconnected: '" + x.vertex_names[0] + "' and '" +
                         x.vertex_names[static_cast<std::size_t>(far)] + "' are not joined by edges");
    }

    x.links.resize(idx(x.vertex_count()));
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        x.links[idx(x.edges[e].a)].nodes.push_back(static_cast<EdgeId>(e));
        x.links[idx(x.edges[e].b)].nodes.push_back(static_cast<EdgeId>(e));
    }
    for (int p = 0; p < x.polygon_count(); ++p) {
        const Polygon& poly = x.polygons[idx(p)];
        const int m = poly.length();
        for (int i = 0; i < m; ++i)
            x.links[idx(poly.boundary[idx(i)])].corners.push_back(
                LinkCorner{p, i, poly.sides[idx(cyc(i - 1, m))].edge, poly.sides[idx(i)].edge});
    }
    return x;
}

PolygonalComplex load_complex(std::string_view text) { return validate_complex(parse_complex(text)); }

std::string write_complex(const PolygonalComplex& x) {
    std::ostringstream out;
    for (const auto& v : x.vertex_names) out << "vertex " << v << '\n';
    for (const auto& e : x.edges)
        out << "edge " << e.name << ' ' << x.vertex_names[idx(e.a)] << ' ' << x.vertex_names[idx(e.b)] << '\n';
    for (const auto& p : x.polygons) {
        out << "polygon " << p.name << " :";
        for (const Side& s : p.sides) out << ' ' << (s.forward ? '+' : '-') << x.edges[idx(s.edge)].name;
        out << '\n';
    }
    return out.str();
}

std::vector<PolyPiece> pieces(const PolygonalComplex& x) {
    std::vector<PolyPiece> out;
    const int np = x.polygon_count();
    for (int p = 0; p < np; ++p) {
        const Polygon& P = x.polygons[idx(p)];
        const int m = P.length();
        // Position of each edge in the other polygons, filled per partner.
        std::map<int, std::vector<int>> shared;  // partner -> positions in P
        for (int i = 0; i < m; ++i)
            for (int q : x.edges[idx(P.sides[idx(i)].edge)].polygons)
                if (q > p) shared[q].push_back(i);
        for (const auto& [q, positions] : shared) {
            const Polygon& Q = x.polygons[idx(q)];
            std::vector<char> mark(idx(m), 0);
            for (int i : positions) mark[idx(i)] = 1;
            for (int i = 0; i < m; ++i) {
                if (!mark[idx(i)] || mark[idx(cyc(i - 1, m))]) continue;
                PolyPiece piece;
                piece.first = p;
                piece.second = q;
                piece.first_start = i;
                for (int j = i; mark[idx(cyc(j, m))]; ++j) piece.edges.push_back(P.sides[idx(cyc(j, m))].edge);
                const EdgeId e0 = piece.edges.front();
                for (int k = 0; k < Q.length(); ++k)
                    if (Q.sides[idx(k)].edge == e0) {
                        piece.second_start = k;
                        piece.second_reversed = Q.sides[idx(k)].forward != P.sides[idx(i)].forward;
                    }
                out.push_back(std::move(piece));
            }
        }
    }
    return out;
}

std::optional<LinkCycle> shortest_link_cycle(const PolygonalComplex& x, VertexId v) {
    const VertexLink& link = x.links[idx(v)];
    const int n = static_cast<int>(link.nodes.size());
    std::map<EdgeId, int> local;
    for (int i = 0; i < n; ++i) local[link.nodes[idx(i)]] = i;
    // Underlying simple graph; the polygon of one corner per link edge.
    std::vector<std::map<int, int>> adj(idx(n));
    for (const LinkCorner& c : link.corners) {
        const int a = local.at(c.in), b = local.at(c.out);
        adj[idx(a)].emplace(b, c.polygon);
        adj[idx(b)].emplace(a, c.polygon);
    }
    std::optional<std::vector<int>> best;
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(idx(n), -1), parent(idx(n), -1);
        std::deque<int> queue{root};
        dist[idx(root)] = 0;
        while (!queue.empty()) {
            const int a = queue.front();
            queue.pop_front();
            for (const auto& [b, poly] : adj[idx(a)]) {
                if (dist[idx(b)] < 0) {
                    dist[idx(b)] = dist[idx(a)] + 1;
                    parent[idx(b)] = a;
                    queue.push_back(b);
                } else if (b != parent[idx(a)] && a < b) {
                    const int len = dist[idx(a)] + dist[idx(b)] + 1;
                    if (best && static_cast<int>(best->size()) <= len) continue;
                    std::vector<int> pa, pb;
                    for (int c = a; c >= 0; c = parent[idx(c)]) pa.push_back(c);
                    for (int c = b; c >= 0; c = parent[idx(c)]) pb.push_back(c);
                    // Simple only when the two tree paths meet at the root alone.
                    std::set<int> inter(pa.begin(), pa.end());
                    int common = 0;
                    for (int c : pb) common += static_cast<int>(inter.count(c));
                    if (common != 1) continue;
                    std::vector<int> cycle(pa.rbegin(), pa.rend());
                    for (int c : pb)
                        if (c != root) cycle.push_back(c);
                    best = cycle;
                }
            }
        }
    }
    if (!best) return std::nullopt;
    LinkCycle out;
    out.vertex = v;
    const int len = static_cast<int>(best->size());
    for (int i = 0; i < len; ++i) {
        const int a = (*best)[idx(i)], b = (*best)[idx(cyc(i + 1, len))];
        out.nodes.push_back(link.nodes[idx(a)]);
        out.polygons.push_back(adj[idx(a)].at(b));
    }
    return out;
}

PieceCover min_piece_cover(const PolygonalComplex& x, int p, const std::vector<PolyPiece>& all) {
    const int m = x.polygons[idx(p)].length();
    struct Arc {
        int start, len;
        PolyPiece piece;
    };
    std::vector<Arc> arcs;
    for (const PolyPiece& pc : all) {
        if (pc.first == p) {
            arcs.push_back({pc.first_start, pc.length(), pc});
        } else if (pc.second == p) {
            PolyPiece r;
            r.first = p;
            r.second = pc.first;
            r.second_start = pc.first_start;
            r.second_reversed = pc.second_reversed;
            r.edges = pc.edges;
            r.first_start = pc.second_start;
            if (pc.second_reversed) {
                r.first_start = cyc(pc.second_start - (pc.length() - 1), m);
                std::reverse(r.edges.begin(), r.edges.end());
                r.second_start = cyc(pc.first_start + pc.length() - 1, x.polygons[idx(pc.first)].length());
            }
            arcs.push_back({r.first_start, r.length(), r});
        }
    }
    PieceCover out;
    out.polygon = p;
    // An optimal cover contains an arc through position 0; after fixing it the
    // rest is a linear interval cover, which the farthest-reach greedy solves.
    for (const Arc& first : arcs) {
        const int o = cyc(-first.start, m);
        if (o >= first.len) continue;
        int pos = first.len - o;
        const int end = m - o;
        std::vector<const Arc*> chosen{&first};
        bool ok = true;
        while (pos < end) {
            const Arc* pick = nullptr;
            int reach = pos;
            for (const Arc& a : arcs) {
                const int off = cyc(pos - a.start, m);
                if (off < a.len && pos + a.len - off > reach) {
                    reach = pos + a.len - off;
                    pick = &a;
                }
            }
            if (!pick) {
                ok = false;
                break;
            }
            chosen.push_back(pick);
            pos = reach;
        }
        if (!ok) continue;
        if (!out.coverable || static_cast<int>(chosen.size()) < out.pieces) {
            out.coverable = true;
            out.pieces = static_cast<int>(chosen.size());
            out.cover.clear();
            for (const Arc* a : chosen) out.cover.push_back(a->piece);
        }
    }
    return out;
}

PolySCVerdict polygonal_sc_check(const PolygonalComplex& x, const Rational& lambda, int n_c, int n_t) {
    PolySCVerdict v;
    const auto all = pieces(x);
    v.piece_count = static_cast<int>(all.size());
    for (const PolyPiece& pc : all) {
        for (int poly : {pc.first, pc.second}) {
            const Rational ratio(pc.length(), x.polygons[idx(poly)].length());
            if (ratio > v.max_ratio) {
                v.max_ratio = ratio;
                v.cprime_witness = pc;
                v.cprime_polygon = poly;
            }
        }
    }
    v.cprime = v.max_ratio < lambda;
    for (int p = 0; p < x.polygon_count(); ++p) {
        auto cover = min_piece_cover(x, p, all);
        if (!cover.coverable) continue;
        if (v.min_cover < 0 || cover.pieces < v.min_cover) {
            v.min_cover = cover.pieces;
            v.c_witness = std::move(cover);
        }
    }
    v.c = v.min_cover < 0 || v.min_cover >= n_c;
    for (VertexId u = 0; u < x.vertex_count(); ++u) {
        auto cycle = shortest_link_cycle(x, u);
        if (cycle && (v.link_girth < 0 || cycle->length() < v.link_girth)) {
            v.link_girth = cycle->length();
            v.t_witness = std::move(cycle);
        }
    }
    v.t = v.link_girth < 0 || v.link_girth >= n_t;
    return v;
}

bool WallSystem::all_two_sided() const {
    return std::all_of(walls.begin(), walls.end(), [](const Wall& w) { return w.two_sided(); });
}

WallSystem hypergraphs(const PolygonalComplex& x) {
    const int ne = x.edge_count();
    std::vector<int> rank(idx(ne)), parent(idx(ne));
    boost::disjoint_sets<int*, int*> dsu(rank.data(), parent.data());
    for (int e = 0; e < ne; ++e) dsu.make_set(e);
    for (const Polygon& p : x.polygons) {
        const int half = p.length() / 2;
        for (int i = 0; i < half; ++i) dsu.union_set(p.sides[idx(i)].edge, p.sides[idx(i + half)].edge);
    }
    WallSystem ws;
    ws.wall_of_edge.assign(idx(ne), -1);
    std::map<int, int> root_to_wall;
    for (int e = 0; e < ne; ++e) {
        auto [it, fresh] = root_to_wall.emplace(dsu.find_set(e), static_cast<int>(ws.walls.size()));
        if (fresh) ws.walls.push_back(Wall{it->second, {}, {}, {}});
        ws.wall_of_edge[idx(e)] = it->second;
        ws.walls[idx(it->second)].dual_edges.push_back(e);
    }
    const auto adj = x.adjacency();
    const int nv = x.vertex_count();
    for (Wall& w : ws.walls) {
        std::vector<int> comp(idx(nv), -1);
        for (VertexId s = 0; s < nv; ++s) {
            if (comp[idx(s)] >= 0) continue;
            const int c = static_cast<int>(w.sides.size());
            w.sides.emplace_back(idx(nv));
            std::deque<VertexId> queue{s};
            comp[idx(s)] = c;
            while (!queue.empty()) {
                const VertexId a = queue.front();
                queue.pop_front();
                w.sides.back().set(idx(a));
                for (auto [b, e] : adj[idx(a)])
                    if (ws.wall_of_edge[idx(e)] != w.id && comp[idx(b)] < 0) {
                        comp[idx(b)] = c;
                        queue.push_back(b);
                    }
            }
        }
        std::set<int> carrier;
        for (EdgeId e : w.dual_edges)
            for (int p : x.edges[idx(e)].polygons) carrier.insert(p);
        w.carrier.assign(carrier.begin(), carrier.end());
    }
    const std::size_t nw = ws.walls.size();
    ws.crossing.assign(nw, Bitset(nw));
    for (const Polygon& p : x.polygons)
        for (const Side& a : p.sides)
            for (const Side& b : p.sides) {
                const int wa = ws.wall_of_edge[idx(a.edge)], wb = ws.wall_of_edge[idx(b.edge)];
                if (wa != wb) ws.crossing[idx(wa)].set(idx(wb));
            }
    return ws;
}

std::string format_point(const PolygonalComplex& x, const Point& p) {
    if (p.id < 0) return "none";
    switch (p.kind) {
        case Point::VERTEX: return "vertex " + x.vertex_names[idx(p.id)];
        case Point::EDGE_MIDPOINT: return "midpoint of edge " + x.edges[idx(p.id)].name;
        case Point::POLYGON_CENTER: return "center of polygon " + x.polygons[idx(p.id)].name;
    }
    return "none";
}

int point_side(const PolygonalComplex& x, const WallSystem& ws, int wall, const Point& p) {
    const Wall& w = ws.walls[idx(wall)];
    switch (p.kind) {
        case Point::VERTEX: return w.side(p.id);
        case Point::EDGE_MIDPOINT:
            if (ws.wall_of_edge[idx(p.id)] == wall) return -1;
            return w.side(x.edges[idx(p.id)].a);
        case Point::POLYGON_CENTER:
            for (const Side& s : x.polygons[idx(p.id)].sides)
                if (ws.wall_of_edge[idx(s.edge)] == wall) return -1;
            return w.side(x.polygons[idx(p.id)].boundary[0]);
    }
    return -1;
}

std::vector<int> separating_walls(const PolygonalComplex& x, const WallSystem& ws, const Point& a, const Point& b) {
    std::vector<int> out;
    for (const Wall& w : ws.walls) {
        if (!w.two_sided()) continue;
        const int sa = point_side(x, ws, w.id, a), sb = point_side(x, ws, w.id, b);
        if (sa >= 0 && sb >= 0 && sa != sb) out.push_back(w.id);
    }
    return out;
}

std::vector<int> max_disjoint_walls(const WallSystem& ws, const std::vector<int>& walls) {
    const std::size_t nw = ws.walls.size();
    Bitset candidates(nw);
    for (int w : walls) candidates.set(idx(w));
    std::vector<Bitset> compat(nw, Bitset(nw));
    for (std::size_t w = 0; w < nw; ++w) {
        compat[w] = ~ws.crossing[w];
        compat[w].reset(w);
    }
    return members(detail::maximum_clique(compat, candidates));
}

DualCubeComplex dual_cube_complex(const PolygonalComplex& x) {
    DualCubeComplex c;
    c.walls = hypergraphs(x);
    const auto& walls = c.walls.walls;
    const int nw = static_cast<int>(walls.size());
    for (const Wall& w : walls)
        if (!w.two_sided())
            throw PreconditionError("degenerate wallspace: wall w" + std::to_string(w.id) + " (through edge " +
                                    x.edges[idx(w.dual_edges.front())].name + ") has " +
                                    std::to_string(w.sides.size()) + " side(s) instead of 2");
    // compat[h] lists halfspaces meeting halfspace h = 2 * wall + side.
    std::vector<Bitset> compat(idx(2 * nw), Bitset(idx(2 * nw)));
    for (int h = 0; h < 2 * nw; ++h)
        for (int k = 0; k < 2 * nw; ++k)
            if ((walls[idx(h / 2)].sides[idx(h % 2)] & walls[idx(k / 2)].sides[idx(k % 2)]).any())
                compat[idx(h)].set(idx(k));
    auto selected = [&](const Bitset& o) {
        Bitset s(idx(2 * nw));
        for (int w = 0; w < nw; ++w) s.set(idx(2 * w + (o[idx(w)] ? 1 : 0)));
        return s;
    };

    Graph g;
    std::map<Bitset, VertexId> index;
    std::deque<VertexId> queue;
    auto name_of = [&](const Bitset& o) {
        std::string s = "o:";
        for (int w = 0; w < nw; ++w) s += o[idx(w)] ? '1' : '0';
        return s;
    };
    for (VertexId v = 0; v < x.vertex_count(); ++v) {
        Bitset o(idx(nw));
        for (int w = 0; w < nw; ++w)
            if (walls[idx(w)].side(v)) o.set(idx(w));
        auto [it, fresh] = index.emplace(o, g.vertex_count());
        if (fresh) {
            g.add_vertex(x.vertex_names[idx(v)]);
            c.orientations.push_back(o);
            queue.push_back(it->second);
        }
        c.principal.push_back(it->second);
    }
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        const Bitset o = c.orientations[idx(v)];
        const Bitset sel = selected(o);
        for (int w = 0; w < nw; ++w) {
            const int cur = 2 * w + (o[idx(w)] ? 1 : 0);
            Bitset rest = sel;
            rest.reset(idx(cur));
            if (!rest.is_subset_of(compat[idx(cur ^ 1)])) continue;
            Bitset flipped = o;
            flipped.flip(idx(w));
            auto it = index.find(flipped);
            VertexId u;
            if (it == index.end()) {
                if (g.vertex_count() >= kDualVertexCap)
                    throw PreconditionError("dual cube complex exceeds " + std::to_string(kDualVertexCap) +
                                            " vertices");
                u = g.add_vertex(name_of(flipped));
                index.emplace(flipped, u);
                c.orientations.push_back(flipped);
                queue.push_back(u);
            } else {
                u = it->second;
            }
            if (!g.adjacent(u, v)) g.add_edge(u, v);
        }
    }
    c.median.emplace(std::move(g));

    const MedianGraph& m = *c.median;
    c.wall_of_hyperplane.assign(idx(m.hyperplane_count()), -1);
    c.hyperplane_of_wall.assign(idx(nw), -1);
    for (const Hyperplane& h : m.hyperplanes()) {
        for (EdgeId e : h.dual_edges) {
            const Edge ed = m.graph().edge(e);
            const Bitset diff = c.orientations[idx(ed.u)] ^ c.orientations[idx(ed.v)];
            const int w = static_cast<int>(diff.find_first());
            if (diff.count() != 1 || (c.wall_of_hyperplane[idx(h.id)] >= 0 && c.wall_of_hyperplane[idx(h.id)] != w))
                throw PreconditionError("dual hyperplane " + std::to_string(h.id) + " does not match a single wall");
            c.wall_of_hyperplane[idx(h.id)] = w;
        }
        const int w = c.wall_of_hyperplane[idx(h.id)];
        if (c.hyperplane_of_wall[idx(w)] >= 0)
            throw PreconditionError("wall w" + std::to_string(w) + " carries two dual hyperplanes");
        c.hyperplane_of_wall[idx(w)] = h.id;
    }
    for (int w = 0; w < nw; ++w)
        if (c.hyperplane_of_wall[idx(w)] < 0)
            throw PreconditionError("wall w" + std::to_string(w) + " has no dual hyperplane");
    return c;
}

Classification classify_maximal_cubes(const PolygonalComplex& x, DualCubeComplex& c) {
    Classification out;
    const MedianGraph& m = c.graph();
    const auto& ws = c.walls;
    std::vector<std::set<int>> poly_walls;
    for (const Polygon& p : x.polygons) {
        std::set<int> s;
        for (const Side& side : p.sides) s.insert(ws.wall_of_edge[idx(side.edge)]);
        poly_walls.push_back(std::move(s));
    }
    c.tags.assign(m.maximal_cubes().size(), CubeTag{});
    for (std::size_t i = 0; i < m.maximal_cubes().size(); ++i) {
        const Cube& cube = m.maximal_cubes()[i];
        std::set<int> cw;
        for (int h : cube.crossing) cw.insert(c.wall_of_hyperplane[idx(h)]);
        auto holds = [&](VertexId xv) {
            return std::binary_search(cube.vertices.begin(), cube.vertices.end(), c.principal[idx(xv)]);
        };
        CubeTag& tag = c.tags[i];
        for (int p = 0; p < x.polygon_count() && tag.kind == CubeTag::UNMATCHED; ++p) {
            const Polygon& poly = x.polygons[idx(p)];
            if (poly_walls[idx(p)] != cw || cube.dim * 2 != poly.length()) continue;
            if (std::any_of(poly.boundary.begin(), poly.boundary.end(), holds)) tag = CubeTag{CubeTag::CELL_CUBE, p};
        }
        if (tag.kind == CubeTag::UNMATCHED && cube.dim == 1) {
            const Wall& w = ws.walls[idx(*cw.begin())];
            const EdgeId e = w.dual_edges.front();
            if (w.dual_edges.size() == 1 && x.isolated(e) && holds(x.edges[idx(e)].a) && holds(x.edges[idx(e)].b))
                tag = CubeTag{CubeTag::EDGE_CUBE, e};
        }
        if (tag.kind == CubeTag::UNMATCHED) {
            out.complete = false;
            out.unmatched.push_back(static_cast<int>(i));
        }
    }
    return out;
}

std::string write_wall_labels(const DualCubeComplex& c) {
    std::ostringstream out;
    const MedianGraph& m = c.graph();
    for (EdgeId e = 0; e < m.graph().edge_count(); ++e) {
        const Edge ed = m.graph().edge(e);
        out << "label " << m.graph().name(ed.u) << ' ' << m.graph().name(ed.v) << " w"
            << c.wall_of_hyperplane[idx(m.hyperplane_of_edge(e))] << '\n';
    }
    return out.str();
}

ProjectionResult dual_projection(const PolygonalComplex& x, const DualCubeComplex& c, VertexId v) {
    ProjectionResult r;
    const MedianGraph& m = c.graph();
    if (c.tags.size() != m.maximal_cubes().size())
        throw PreconditionError("projection needs classified maximal cubes");
    std::vector<int> cubes;
    for (std::size_t i = 0; i < m.maximal_cubes().size(); ++i) {
        const auto& vs = m.maximal_cubes()[i].vertices;
        if (std::binary_search(vs.begin(), vs.end(), v)) cubes.push_back(static_cast<int>(i));
    }
    for (int i : cubes) {
        const CubeTag& tag = c.tags[idx(i)];
        if (tag.kind != CubeTag::EDGE_CUBE) continue;
        const PolyEdge& e = x.edges[idx(tag.source)];
        r.edge_cube = tag.source;
        // Dual distance to v(a) equals distance along the edge to a.
        if (c.principal[idx(e.a)] == v) r.point = Point{Point::VERTEX, e.a};
        else if (c.principal[idx(e.b)] == v) r.point = Point{Point::VERTEX, e.b};
        else r.point = Point{Point::EDGE_MIDPOINT, tag.source};
        r.note = "edge cube of " + e.name;
        return r;
    }
    std::set<int> polys;
    for (int i : cubes) {
        const CubeTag& tag = c.tags[idx(i)];
        if (tag.kind != CubeTag::CELL_CUBE) {
            r.intersection_ok = false;
            r.note = "maximal cube " + std::to_string(i) + " is neither an edge nor a cell cube";
            return r;
        }
        polys.insert(tag.source);
    }
    r.polygons.assign(polys.begin(), polys.end());
    if (r.polygons.empty()) {
        r.intersection_ok = false;
        r.note = "vertex lies in no maximal cube";
        return r;
    }
    if (r.polygons.size() == 1) {
        r.point = Point{Point::POLYGON_CENTER, r.polygons[0]};
        return r;
    }
    Bitset common = x.polygon_vertices(r.polygons[0]);
    for (int p : r.polygons) common &= x.polygon_vertices(p);
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < x.edge_count(); ++e) {
        const auto& ep = x.edges[idx(e)].polygons;
        if (std::all_of(r.polygons.begin(), r.polygons.end(),
                        [&](int p) { return std::find(ep.begin(), ep.end(), p) != ep.end(); }))
            edges.push_back(e);
    }
    if (common.none()) {
        r.intersection_ok = false;
        r.note = "polygons of the maximal cubes have no common point";
        return r;
    }
    if (edges.empty()) {
        if (common.count() != 1) {
            r.intersection_ok = false;
            r.note = "polygons of the maximal cubes meet in isolated vertices";
            return r;
        }
        r.point = Point{Point::VERTEX, static_cast<int>(common.find_first())};
        r.note = "intersection is a single vertex";
        return r;
    }
    // The common edges must form one path spanning the common vertices.
    std::map<VertexId, std::vector<EdgeId>> inc;
    for (EdgeId e : edges) {
        inc[x.edges[idx(e)].a].push_back(e);
        inc[x.edges[idx(e)].b].push_back(e);
    }
    VertexId start = -1;
    for (const auto& [u, es] : inc) {
        if (es.size() > 2) start = -2;
        if (es.size() == 1 && start == -1) start = u;
    }
    if (start < 0 || inc.size() != edges.size() + 1 || common.count() != inc.size()) {
        r.intersection_ok = false;
        r.note = "polygons of the maximal cubes do not meet in a path";
        return r;
    }
    std::vector<VertexId> path{start};
    std::vector<EdgeId> path_edges;
    EdgeId prev = -1;
    while (path_edges.size() < edges.size()) {
        const auto& es = inc[path.back()];
        const EdgeId e = es[0] != prev ? es[0] : (es.size() > 1 ? es[1] : -1);
        if (e < 0) break;
        path_edges.push_back(e);
        const PolyEdge& pe = x.edges[idx(e)];
        path.push_back(pe.a == path.back() ? pe.b : pe.a);
        prev = e;
    }
    if (path_edges.size() != edges.size()) {
        r.intersection_ok = false;
        r.note = "polygons of the maximal cubes do not meet in a path";
        return r;
    }
    const int len = static_cast<int>(path_edges.size());
    if (len % 2 == 0) r.point = Point{Point::VERTEX, path[idx(len / 2)]};
    else r.point = Point{Point::EDGE_MIDPOINT, path_edges[idx(len / 2)]};
    return r;
}

namespace {

struct TransferContext {
    const PolygonalComplex& x;
    const DualCubeComplex& c;
    std::vector<std::optional<ProjectionResult>> cache;

    const ProjectionResult& project(VertexId v) {
        auto& slot = cache[idx(v)];
        if (!slot) slot = dual_projection(x, c, v);
        return *slot;
    }
};

// Fills `t` with the pair when it is worse than the current record.
void check_pair(TransferContext& ctx, VertexId u, VertexId w, int max_r, TransferCheck& t, bool& recorded) {
    ++t.pairs_checked;
    const int k = ctx.c.graph().disjoint_chain(u, w).length;
    const int required = std::min(k - 2, max_r);
    if (required < 1) return;
    const auto& pu = ctx.project(u);
    const auto& pw = ctx.project(w);
    std::vector<int> chain;
    if (pu.intersection_ok && pw.intersection_ok)
        chain = max_disjoint_walls(ctx.c.walls, separating_walls(ctx.x, ctx.c.walls, pu.point, pw.point));
    const int got = static_cast<int>(chain.size());
    const bool ok = pu.intersection_ok && pw.intersection_ok && got >= required;
    const int slack = got - required;
    const int old_slack = t.wall_chain - std::min(t.dual_chain - 2, max_r);
    if (!recorded || (t.holds && !ok) || (t.holds == ok && slack < old_slack)) {
        t.u = u;
        t.w = w;
        t.dual_chain = k;
        t.wall_chain = got;
        t.walls = chain;
        recorded = true;
    }
    if (!ok) t.holds = false;
}

}  // namespace

TransferCheck separation_transfer(const PolygonalComplex& x, const DualCubeComplex& c, int max_r,
                                  int all_pairs_limit, long samples, unsigned long seed) {
    TransferContext ctx{x, c, std::vector<std::optional<ProjectionResult>>(idx(c.graph().vertex_count()))};
    TransferCheck t;
    t.max_r = max_r;
    bool recorded = false;
    const int n = c.graph().vertex_count();
    if (n <= all_pairs_limit) {
        for (VertexId u = 0; u < n; ++u)
            for (VertexId w = u + 1; w < n; ++w) check_pair(ctx, u, w, max_r, t, recorded);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (long i = 0; i < samples; ++i) {
            const VertexId u = pick(rng), w = pick(rng);
            if (u != w) check_pair(ctx, u, w, max_r, t, recorded);
        }
    }
    return t;
}

TransferCheck separation_transfer_pair(const PolygonalComplex& x, const DualCubeComplex& c, VertexId u, VertexId w,
                                       int max_r) {
    TransferContext ctx{x, c, std::vector<std::optional<ProjectionResult>>(idx(c.graph().vertex_count()))};
    TransferCheck t;
    t.max_r = max_r;
    bool recorded = false;
    check_pair(ctx, u, w, max_r, t, recorded);
    if (!recorded) {
        t.u = u;
        t.w = w;
        t.dual_chain = c.graph().disjoint_chain(u, w).length;
    }
    return t;
}

IntersectionCheck pairwise_intersection_check(const PolygonalComplex& x, int max_size) {
    IntersectionCheck out;
    const int np = x.polygon_count();
    std::vector<Bitset> verts;
    for (int p = 0; p < np; ++p) verts.push_back(x.polygon_vertices(p));
    std::vector<int> family;
    // Extends pairwise intersecting families in increasing polygon order.
    auto grow = [&](auto&& self, int next, const Bitset& common) -> void {
        if (!out.holds) return;
        for (int p = next; p < np; ++p) {
            if (!std::all_of(family.begin(), family.end(), [&](int q) { return verts[idx(p)].intersects(verts[idx(q)]); }))
                continue;
            family.push_back(p);
            const Bitset now = family.size() == 1 ? verts[idx(p)] : (common & verts[idx(p)]);
            ++out.families_checked;
            if (now.none()) {
                out.holds = false;
                out.witness = family;
                return;
            }
            if (static_cast<int>(family.size()) < max_size) self(self, p + 1, now);
            family.pop_back();
            if (!out.holds) return;
        }
    };
    grow(grow, 0, Bitset(idx(x.vertex_count())));
    return out;
}

SeparationCheck polygon_separation_check(const PolygonalComplex& x, const WallSystem& ws) {
    SeparationCheck out;
    for (int p = 0; p < x.polygon_count(); ++p) {
        const Bitset vp = x.polygon_vertices(p);
        for (int q = p + 1; q < x.polygon_count(); ++q) {
            const Bitset vq = x.polygon_vertices(q);
            if (vp.intersects(vq)) continue;
            ++out.pairs_checked;
            const bool separated = std::any_of(ws.walls.begin(), ws.walls.end(), [&](const Wall& w) {
                if (!w.two_sided()) return false;
                return (vp.is_subset_of(w.sides[0]) && vq.is_subset_of(w.sides[1])) ||
                       (vp.is_subset_of(w.sides[1]) && vq.is_subset_of(w.sides[0]));
            });
            if (!separated && out.holds) {
                out.holds = false;
                out.p = p;
                out.q = q;
            }
        }
    }
    return out;
}

const char* to_string(CubeTag::Kind kind) {
    switch (kind) {
        case CubeTag::EDGE_CUBE: return "edge-cube";
        case CubeTag::CELL_CUBE: return "cell-cube";
        case CubeTag::UNMATCHED: return "unmatched";
    }
    return "unmatched";
}

}  // namespace cubical::poly
