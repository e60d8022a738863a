#pragma once

#include "hhodge/group.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hhodge::cli {

// Stable (g, n) with g <= max_genus and n <= max_tails, ordered by (g, n).
std::vector<std::pair<int, int>> stable_shapes(int max_genus, int max_tails);

// All of G^n in lexicographic index order. When |G| > 3 and there are more than `limit`
// vectors, a seeded sample of `limit` of them is returned, still in lexicographic order.
std::vector<std::vector<int>> monodromy_vectors(const FiniteGroup& G, int n, int limit, std::uint64_t seed);

}  // namespace hhodge::cli
