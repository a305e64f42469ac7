#include "cliques.hpp"

namespace cubical::detail {

namespace {

void expand(const std::vector<Bitset>& adj, Bitset& r, Bitset p, Bitset x,
            const std::function<void(const Bitset&)>& emit) {
    if (p.none() && x.none()) {
        emit(r);
        return;
    }
    // Pivot with the most neighbors in p.
    std::size_t pivot = Bitset::npos;
    std::size_t best = 0;
    const Bitset px = p | x;
    for (auto u = px.find_first(); u != Bitset::npos; u = px.find_next(u)) {
        const auto c = (p & adj[u]).count();
        if (pivot == Bitset::npos || c > best) {
            pivot = u;
            best = c;
        }
    }
    const Bitset branch = p - adj[pivot];
    for (auto v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
        r.set(v);
        expand(adj, r, p & adj[v], x & adj[v], emit);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

void for_each_maximal_clique(const std::vector<Bitset>& adj, const Bitset& candidates,
                             const std::function<void(const Bitset&)>& emit) {
    Bitset r(candidates.size());
    expand(adj, r, candidates, Bitset(candidates.size()), emit);
}

Bitset maximum_clique(const std::vector<Bitset>& adj, const Bitset& candidates) {
    Bitset best(candidates.size());
    for_each_maximal_clique(adj, candidates, [&](const Bitset& c) {
        if (c.count() > best.count()) best = c;
    });
    return best;
}

}  // namespace cubical::detail
