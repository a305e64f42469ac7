#include "cubical/graph.hpp"

#include <algorithm>
#include <deque>

#include "cubical/common.hpp"

namespace cubical {

VertexId Graph::add_vertex(std::string name) {
    if (index_.count(name) != 0) throw InputError("duplicate vertex '" + name + "'");
    const auto id = static_cast<VertexId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    adj_.emplace_back();
    return id;
}

VertexId Graph::ensure_vertex(const std::string& name) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    return add_vertex(name);
}

std::uint64_t Graph::key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

EdgeId Graph::add_edge(VertexId a, VertexId b) {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loop at vertex '" + name(a) + "'");
    const auto k = key(a, b);
    if (edge_index_.count(k) != 0) throw InputError("duplicate edge '" + name(a) + "' -- '" + name(b) + "'");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    edge_index_.emplace(k, id);
    auto insert_sorted = [](std::vector<VertexId>& list, VertexId x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[static_cast<std::size_t>(a)], b);
    insert_sorted(adj_[static_cast<std::size_t>(b)], a);
    return id;
}

EdgeId Graph::add_edge(const std::string& a, const std::string& b) { return add_edge(at(a), at(b)); }

std::optional<VertexId> Graph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::at(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
    if (a == b) return std::nullopt;
    auto it = edge_index_.find(key(a, b));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::is_connected() const {
    if (vertex_count() == 0) return true;
    const auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

Graph Graph::induced(const std::vector<VertexId>& keep) const {
    Graph out;
    for (VertexId v : keep) out.add_vertex(name(v));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) out.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return out;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    std::deque<VertexId> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] != kUnreachable) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
    d_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (VertexId v = 0; v < n_; ++v) {
        const auto row = bfs_distances(g, v);
        d_.insert(d_.end(), row.begin(), row.end());
    }
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int x : d_) best = std::max(best, x);
    return best;
}

std::vector<VertexId> geodesic_path(const Graph& g, const DistanceMatrix& d, VertexId a, VertexId b) {
    if (d(a, b) == kUnreachable) throw PreconditionError("no path between '" + g.name(a) + "' and '" + g.name(b) + "'");
    std::vector<VertexId> path{a};
    VertexId cur = a;
    while (cur != b) {
        for (VertexId w : g.neighbors(cur)) {
            if (d(w, b) == d(cur, b) - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

}  // namespace cubical
