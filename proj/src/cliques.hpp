#pragma once

#include <functional>
#include <vector>

#include "cubical/common.hpp"

namespace cubical::detail {

// Bron-Kerbosch with pivoting over the vertices in `candidates`; `adj[i]` is
// the neighborhood of i. The callback receives each maximal clique.
void for_each_maximal_clique(const std::vector<Bitset>& adj, const Bitset& candidates,
                             const std::function<void(const Bitset&)>& emit);

Bitset maximum_clique(const std::vector<Bitset>& adj, const Bitset& candidates);

}  // namespace cubical::detail
