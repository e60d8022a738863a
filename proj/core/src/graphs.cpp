#include "hhodge/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hhodge {

std::uint32_t tail_mask(const std::vector<int>& tails) {
  std::uint32_t mask = 0;
  for (int t : tails) mask |= 1u << (t - 1);
  return mask;
}

std::vector<int> tails_from_mask(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (mask & (1u << (i - 1))) out.push_back(i);
  return out;
}

GraphKey DecoratedCutGraph::key() const {
  return GraphKey{kind, g1, kind == GraphKind::tree ? tail_mask(tails1) : 0u, m_plus};
}

bool is_stable_graph(const DecoratedCutGraph& graph, int g, int n) {
  const int n1 = static_cast<int>(graph.tails1.size()), n2 = static_cast<int>(graph.tails2.size());
  if (graph.kind == GraphKind::loop) return graph.g1 == g - 1 && g >= 1 && n1 == n && 2 * graph.g1 - 2 + n1 + 2 > 0;
  return graph.g1 >= 0 && graph.g2 >= 0 && graph.g1 + graph.g2 == g && n1 + n2 == n &&
         2 * graph.g1 - 2 + n1 + 1 > 0 && 2 * graph.g2 - 2 + n2 + 1 > 0;
}

std::vector<DecoratedCutGraph> enumerate_cut_graphs(int g, int n, const std::vector<int>& m, const FiniteGroup& G) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("unstable (g, n)");
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("monodromy vector length differs from n");
  if (n > 31) throw std::invalid_argument("too many tails");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::vector<DecoratedCutGraph> out;
  auto emit = [&](DecoratedCutGraph base) {
    for (int mp = 0; mp < G.order(); ++mp) {
      DecoratedCutGraph c = base;
      c.m_plus = mp;
      c.m_minus = G.inv(mp);
      c.monodromy = m;
      out.push_back(std::move(c));
    }
  };
  if (g >= 1) {
    DecoratedCutGraph loop;
    loop.kind = GraphKind::loop;
    loop.g1 = g - 1;
    loop.tails1 = all;
    emit(loop);
  }
  std::vector<std::vector<int>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) subsets.push_back(tails_from_mask(mask, n));
  std::sort(subsets.begin(), subsets.end());
  for (int g1 = 0; g1 <= g; ++g1)
    for (const auto& s1 : subsets) {
      DecoratedCutGraph t;
      t.kind = GraphKind::tree;
      t.g1 = g1;
      t.g2 = g - g1;
      t.tails1 = s1;
      std::set_difference(all.begin(), all.end(), s1.begin(), s1.end(), std::back_inserter(t.tails2));
      if (is_stable_graph(t, g, n)) emit(t);
    }
  return out;
}

GraphInvariants graph_invariants(const DecoratedCutGraph& graph, const FiniteGroup& G) {
  GraphInvariants inv;
  inv.r_plus = G.element_order(graph.m_plus);
  auto describe = [](int genus, const std::vector<int>& tails, int halves) {
    std::string s = "genus " + std::to_string(genus) + ", tails {";
    for (std::size_t i = 0; i < tails.size(); ++i) s += (i ? "," : "") + std::to_string(tails[i]);
    return s + "}, half-edges " + std::to_string(halves);
  };
  if (graph.kind == GraphKind::loop) {
    inv.aut_order = 2;
    inv.decorated_aut_undefined = G.class_of(graph.m_plus) != G.class_of(G.inv(graph.m_plus));
    inv.vertex_descriptions.push_back(describe(graph.g1, graph.tails1, 2));
  } else {
    inv.aut_order = (graph.tails1.empty() && graph.tails2.empty() && graph.g1 == graph.g2) ? 2 : 1;
    inv.vertex_descriptions.push_back(describe(graph.g1, graph.tails1, 1));
    inv.vertex_descriptions.push_back(describe(graph.g2, graph.tails2, 1));
  }
  return inv;
}

DecoratedCutGraph flip_sides(const DecoratedCutGraph& graph, const FiniteGroup& G) {
  DecoratedCutGraph f = graph;
  if (graph.kind == GraphKind::tree) {
    std::swap(f.g1, f.g2);
    std::swap(f.tails1, f.tails2);
  }
  f.m_plus = G.inv(graph.m_plus);
  f.m_minus = graph.m_plus;
  return f;
}

std::vector<std::vector<int>> glued_graph_classes(const std::vector<DecoratedCutGraph>& graphs, const FiniteGroup& G) {
  std::map<GraphKey, int> index;
  for (std::size_t i = 0; i < graphs.size(); ++i) index[graphs[i].key()] = static_cast<int>(i);
  std::vector<int> parent(graphs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto join = [&](int a, const DecoratedCutGraph& other) {
    auto it = index.find(other.key());
    if (it != index.end()) parent[find(a)] = find(it->second);
  };
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    join(static_cast<int>(i), flip_sides(graphs[i], G));
    for (int gamma = 0; gamma < G.order(); ++gamma) {
      DecoratedCutGraph c = graphs[i];
      c.m_plus = G.conjugate(gamma, c.m_plus);
      c.m_minus = G.inv(c.m_plus);
      join(static_cast<int>(i), c);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < graphs.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hhodge
