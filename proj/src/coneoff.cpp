#include "cubical/coneoff.hpp"

#include <algorithm>
#include <random>

namespace cubical {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void require_convex(const MedianGraph& g, const FamilyMember& m) {
    if (m.vertices.size() != idx(g.vertex_count()))
        throw PreconditionError("family member '" + m.name + "' is sized for a different graph");
    if (m.vertices.none()) throw PreconditionError("family member '" + m.name + "' is empty");
    const auto verdict = is_convex(g.graph(), g.distances(), m.vertices);
    if (verdict.convex) return;
    std::string path;
    for (VertexId v : verdict.geodesic) path += (path.empty() ? "" : " ") + g.graph().name(v);
    throw PreconditionError("family member '" + m.name + "' is not convex: geodesic " + path + " leaves it at " +
                            g.graph().name(verdict.outside));
}

}  // namespace

const char* to_string(ConeKind kind) { return kind == ConeKind::CLIQUE ? "clique" : "apex"; }

ConeOffGraph cone_off(const MedianGraph& g, const std::vector<FamilyMember>& family, ConeKind kind) {
    for (const auto& m : family) require_convex(g, m);
    ConeOffGraph out;
    out.kind = kind;
    out.base_vertex_count = g.vertex_count();
    out.graph = g.graph();
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& m = family[i];
        out.members.push_back(m.name);
        const auto vs = members(m.vertices);
        if (kind == ConeKind::APEX) {
            const VertexId a = out.graph.add_vertex("apex:" + m.name);
            for (VertexId v : vs) out.graph.add_edge(a, v);
            continue;
        }
        for (std::size_t p = 0; p < vs.size(); ++p)
            for (std::size_t q = p + 1; q < vs.size(); ++q)
                if (!out.graph.adjacent(vs[p], vs[q])) {
                    out.graph.add_edge(vs[p], vs[q]);
                    out.added_edges.push_back(AddedEdge{vs[p], vs[q], static_cast<int>(i)});
                }
    }
    out.dist = DistanceMatrix(out.graph);
    return out;
}

SandwichCheck check_sandwich(const ConeOffGraph& clique, const ConeOffGraph& apex, long samples, unsigned long seed) {
    SandwichCheck out;
    const int n = clique.base_vertex_count;
    auto check = [&](VertexId x, VertexId y) {
        ++out.pairs_checked;
        const int c = clique.dist(x, y), a = apex.dist(x, y);
        if (out.holds && (c > a || a > 2 * c)) {
            out.holds = false;
            out.x = x;
            out.y = y;
            out.clique = c;
            out.apex = a;
        }
    };
    if (samples <= 0) {
        for (VertexId x = 0; x < n; ++x)
            for (VertexId y = x + 1; y < n; ++y) check(x, y);
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long i = 0; i < samples; ++i) check(pick(rng), pick(rng));
    return out;
}

ContractingReport contracting(const MedianGraph& g, int n, long cap) {
    if (n < 1) throw PreconditionError("contracting: n must be at least 1");
    ContractingReport out;
    out.n = n;
    std::vector<FamilyMember> family;
    for (const auto& h : g.hyperplanes()) {
        bool ok = h.dimension < n;
        std::optional<Grid> grid;
        if (ok) {
            bool capped = false;
            grid = grid_through(g, h.id, n, cap, &capped);
            out.lower_bound = out.lower_bound || capped;
            ok = !grid.has_value();
        }
        out.contracting.push_back(ok);
        out.grid.push_back(std::move(grid));
        if (!ok) family.push_back(FamilyMember{"N(J" + std::to_string(h.id) + ")", g.carrier_vertices(h.id)});
    }
    out.gamma = cone_off(g, family, ConeKind::CLIQUE);
    return out;
}

RectangleDiameterCheck contracting_rectangle_check(const MedianGraph& g, const ContractingReport& report) {
    RectangleDiameterCheck out;
    const auto ram = ram_bound(report.n);
    out.thickness = static_cast<int>(ram);
    out.bound = static_cast<int>(4 * ram + 3);
    out.diameter = max_rectangle_diameter(g, report.gamma.dist, out.thickness);
    out.holds = out.diameter <= out.bound;
    return out;
}

FinenessCertificate fineness_certificate(const MedianGraph& g, const std::vector<FamilyMember>& family) {
    for (const auto& m : family) require_convex(g, m);
    FinenessCertificate out;
    for (EdgeId e = 0; e < g.graph().edge_count(); ++e) {
        const auto& edge = g.graph().edge(e);
        int count = 0;
        for (const auto& m : family) count += m.vertices[idx(edge.u)] && m.vertices[idx(edge.v)];
        if (count > out.multiplicity) {
            out.multiplicity = count;
            out.multiplicity_edge = e;
        }
    }
    std::vector<Bitset> crossing;
    for (const auto& m : family) {
        Bitset c(idx(g.hyperplane_count()));
        for (int h = 0; h < g.hyperplane_count(); ++h) c[idx(h)] = g.crosses(h, m.vertices);
        crossing.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const Bitset both = crossing[i] & crossing[j];
            const int c = static_cast<int>(both.count());
            if (c > out.max_common_crossings || out.witness_a < 0) {
                out.max_common_crossings = c;
                out.witness_a = static_cast<int>(i);
                out.witness_b = static_cast<int>(j);
                out.common.clear();
                for (auto h = both.find_first(); h != Bitset::npos; h = both.find_next(h))
                    out.common.push_back(static_cast<int>(h));
            }
        }
    return out;
}

CycleProbe count_cycles_through(const Graph& g, VertexId u, VertexId v, int length, long cap) {
    if (!g.adjacent(u, v)) throw PreconditionError("cycle probe: the two vertices are not adjacent");
    if (length < 3) throw PreconditionError("cycle probe: length must be at least 3");
    if (length > 8) throw PreconditionError("cycle probe: length is capped at 8");
    CycleProbe out;
    std::vector<char> used(idx(g.vertex_count()));
    used[idx(u)] = used[idx(v)] = 1;
    // Paths v -> u with `left` more edges; each cycle through u-v is counted
    // once, oriented so that it leaves u along u-v.
    auto dfs = [&](auto&& self, VertexId at, int left) -> void {
        if (out.capped) return;
        for (VertexId w : g.neighbors(at)) {
            if (w == u) {
                if (left == 1 && at != v && ++out.count >= cap) out.capped = true;
                continue;
            }
            if (used[idx(w)] || left <= 1) continue;
            used[idx(w)] = 1;
            self(self, w, left - 1);
            used[idx(w)] = 0;
            if (out.capped) return;
        }
    };
    dfs(dfs, v, length - 1);
    return out;
}

std::vector<ConeBigonCheck> cone_bigon_checks(const MedianGraph& g, const ConeOffGraph& y, int max_vertices) {
    const int thick = max_thick_rectangle(g).thickness;
    const int bigon = bigon_thinness(g.graph(), g.distances(), y.dist, max_vertices).thinness;
    std::vector<ConeBigonCheck> out;
    for (int l = 1; l <= thick + 1; ++l) {
        ConeBigonCheck c;
        c.thickness = l;
        c.rectangle_diameter = max_rectangle_diameter(g, y.dist, l);
        c.bigon_thinness = bigon;
        c.bound = std::max(2 * l, c.rectangle_diameter);
        c.holds = bigon <= c.bound;
        out.push_back(c);
    }
    return out;
}

}  // namespace cubical
