#pragma once

#include "hhodge/group.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hhodge {

enum class GraphKind { loop, tree };

// Identifies a cut graph inside a fixed (g, n) context.
struct GraphKey {
  GraphKind kind = GraphKind::loop;
  int g1 = 0;
  std::uint32_t tails1 = 0;  // bit i-1 set for tail i on the + vertex
  int m_plus = 0;
  auto operator<=>(const GraphKey&) const = default;
};

// A stable graph with one edge, cut open at the edge, the + half-edge decorated by m₊.
// Trees carry the + half on vertex 1. Tails are numbered from 1.
struct DecoratedCutGraph {
  GraphKind kind = GraphKind::loop;
  int g1 = 0;
  std::vector<int> tails1;
  int g2 = 0;
  std::vector<int> tails2;
  int m_plus = 0;
  int m_minus = 0;
  std::vector<int> monodromy;

  GraphKey key() const;
  bool operator==(const DecoratedCutGraph&) const = default;
};

struct GraphInvariants {
  int r_plus = 1;
  // Automorphisms of the undecorated graph.
  int aut_order = 1;
  // A loop whose m₊ is not conjugate to m₊⁻¹ has no well-defined decorated automorphism count.
  bool decorated_aut_undefined = false;
  std::vector<std::string> vertex_descriptions;
};

// Loops first, then trees by (g₁, sorted S₁); within each graph every m₊ by index.
// Throws std::invalid_argument when 2g-2+n <= 0 or the monodromy has the wrong length.
std::vector<DecoratedCutGraph> enumerate_cut_graphs(int g, int n, const std::vector<int>& m, const FiniteGroup& G);

GraphInvariants graph_invariants(const DecoratedCutGraph& graph, const FiniteGroup& G);

bool is_stable_graph(const DecoratedCutGraph& graph, int g, int n);

// The cut graph obtained by cutting the same edge the other way round.
DecoratedCutGraph flip_sides(const DecoratedCutGraph& graph, const FiniteGroup& G);

// Groups indices of `graphs` by glued decorated graph: (m₊, m₋) up to simultaneous
// conjugation and up to exchanging the two half-edges. Display only.
std::vector<std::vector<int>> glued_graph_classes(const std::vector<DecoratedCutGraph>& graphs, const FiniteGroup& G);

std::uint32_t tail_mask(const std::vector<int>& tails);
std::vector<int> tails_from_mask(std::uint32_t mask, int n);

}  // namespace hhodge
