#include "hhodge_cli/grid.hpp"

#include <algorithm>
#include <random>

namespace hhodge::cli {

std::vector<std::pair<int, int>> stable_shapes(int max_genus, int max_tails) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g <= max_genus; ++g)
    for (int n = 0; n <= max_tails; ++n)
      if (2 * g - 2 + n > 0) out.emplace_back(g, n);
  return out;
}

std::vector<std::vector<int>> monodromy_vectors(const FiniteGroup& G, int n, int limit, std::uint64_t seed) {
  const long order = G.order();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= order;
  std::vector<long> codes(total);
  for (long c = 0; c < total; ++c) codes[c] = c;
  if (order > 3 && total > limit) {
    // The sample depends on the cell so that neighbouring cells do not share a pattern.
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(order) << 32) ^ static_cast<std::uint64_t>(n));
    std::vector<long> picked;
    std::sample(codes.begin(), codes.end(), std::back_inserter(picked), limit, rng);
    codes = std::move(picked);
  }
  std::vector<std::vector<int>> out;
  for (long c : codes) {
    std::vector<int> m(n);
    for (int i = n - 1; i >= 0; --i, c /= order) m[i] = static_cast<int>(c % order);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hhodge::cli
