#pragma once

#include "hhodge/graphs.hpp"
#include "hhodge/group.hpp"
#include "hhodge/repring.hpp"
#include "hhodge/tautring.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hhodge {

// A moduli space of G-covers: genus g base curve, n marked points with monodromies m.
struct ModuliContext {
  GroupPtr group;
  int g = 0;
  int n = 0;
  std::vector<int> monodromy;
  int D = 0;
  std::vector<DecoratedCutGraph> cut_graphs;
  std::vector<int> tail_orders;

  TautContext taut() const { return TautContext{g, n, D}; }
  const FiniteGroup& G() const { return *group; }
  // Position of the graph in cut_graphs; throws std::invalid_argument if absent.
  int graph_index(const GraphKey& key) const;
};

// D defaults to 3g-3+n. Throws std::invalid_argument on unstable (g, n) or D out of range.
ModuliContext make_context(GroupPtr group, int g, std::vector<int> monodromy, std::optional<int> D = std::nullopt);
Subgroup default_g0(const ModuliContext& ctx);
// ⟨m_1, …, m_n⟩: the stabilizer of the principal component when g = 0.
Subgroup principal_component_g0(const ModuliContext& ctx);

// Tail indices are 1-based.
RepTautClass bch_s_puncture(const ModuliContext& ctx, int i);
RepTautClass bch_s_node(const ModuliContext& ctx, const DecoratedCutGraph& graph);
TautClass ch_hodge_base(const ModuliContext& ctx);
RepTautClass bch_hurwitz_hodge(const ModuliContext& ctx, const Subgroup& g0);
TautClass ch_hurwitz_hodge_grr(const ModuliContext& ctx, const Subgroup& g0);
Rational rank_rh(const ModuliContext& ctx, const Subgroup& g0);

// The dual of bch_hurwitz_hodge assembled piece by piece: ψ ↦ -ψ and V^k ↦ V^{r-k} on
// puncture terms, node terms negated, Ch(R) dualized by degree parity.
RepTautClass formal_dual_bch(const ModuliContext& ctx, const Subgroup& g0);
RepTautClass formal_dual_puncture(const ModuliContext& ctx, int i);

// Power series in ψ (first slot) or (ψ₊, ψ₋) with characters of a cyclic subgroup as coefficients.
struct LocalRepSeries {
  std::map<std::pair<int, int>, VirtualCharacter> terms;
  static LocalRepSeries constant(const VirtualCharacter& chi);
};

// Chern-character data of a G-equivariant sheaf on the universal cover.
struct EquivariantSheafData {
  TautClass base_class;                                         // Ch(Rπ̄_* F̄)
  Rational rank;                                                // fiberwise rank of F
  std::vector<LocalRepSeries> puncture;                         // bCh(σ_i* F) over ⟨m_i⟩
  std::vector<std::pair<LocalRepSeries, LocalRepSeries>> node;  // bCh(σ_±* F) over ⟨m₊⟩, per cut graph
};

EquivariantSheafData structure_sheaf_data(const ModuliContext& ctx);
EquivariantSheafData dualizing_sheaf_data(const ModuliContext& ctx);
// base ⊗ ℂ[G] - Σ_i S_{m_i}(F) - Σ_Γ S_Γ(F), the full alternating pushforward.
RepTautClass bch_pushforward_general(const ModuliContext& ctx, const EquivariantSheafData& F);

struct KExpression {
  std::map<std::string, Rational> symbols;  // crrt, crrt_cut, O
  VirtualCharacter trivial_part;            // coefficient of the trivial bundle O
  std::string to_string() const;
  bool operator==(const KExpression& o) const { return symbols == o.symbols && trivial_part == o.trivial_part; }
};

// Loops take {G_cut}; trees take {G₊, G₋}.
KExpression boundary_restriction_crrt(const ModuliContext& ctx, const DecoratedCutGraph& graph, const Subgroup& g0,
                                      const std::vector<Subgroup>& cut_subgroups);

// Returns the context with monodromies θ(m) and the class with decorations and characters transported.
std::pair<ModuliContext, RepTautClass> aut_transport(const std::vector<int>& theta, const ModuliContext& ctx,
                                                     const RepTautClass& cls);
Subgroup transport_subgroup(const std::vector<int>& theta, const Subgroup& h);

// The pieces of bch_hurwitz_hodge, kept separate so that checks can be run on modified inputs.
struct HodgeComponents {
  TautClass base;
  std::vector<RepTautClass> punctures;
  std::vector<RepTautClass> nodes;
  TautClass grr;
  RepTautClass assemble(const ModuliContext& ctx, const Subgroup& g0) const;
};

HodgeComponents compute_components(const ModuliContext& ctx, const Subgroup& g0);

struct IdentityEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityEntry> entries;
  bool all_passed() const;
  const IdentityEntry* find(const std::string& name) const;
};

// Entries: mumford, parity, consistency, puncture_duality, degree_one.
IdentityReport verify_identities(const ModuliContext& ctx, const Subgroup& g0);
IdentityReport verify_components(const ModuliContext& ctx, const Subgroup& g0, const HodgeComponents& parts);

// The closed forms of bch degree 1 and of its character at the identity.
RepTautClass degree_one_closed_form(const ModuliContext& ctx);
TautClass degree_one_rank_closed_form(const ModuliContext& ctx);

// χ_1 of the assembled class, split into its puncture and node contributions.
struct RelativeRHSummary {
  Rational components;                                         // |G/G₀|
  Rational group_order;                                        // |G|
  std::vector<std::vector<Rational>> puncture_series;          // χ_1 S_{m_i}: coefficient of ψ_i^j
  std::vector<std::map<std::pair<int, int>, Rational>> node_series;  // χ_1 S_Γ: coefficient of ρ(ψ₊^a ψ₋^b)
  std::string rendered;
};
RelativeRHSummary relative_rh_summary(const ModuliContext& ctx, const Subgroup& g0);

template <class C>
std::string describe_difference(const GradedClass<C>& a, const GradedClass<C>& b, const FiniteGroup& G,
                                std::size_t limit = 5);

std::string coefficient_string(const Rational& q);
std::string coefficient_string(const Cyclotomic& z);
std::string coefficient_string(const VirtualCharacter& w);

template <class C>
std::string describe_difference(const GradedClass<C>& a, const GradedClass<C>& b, const FiniteGroup& G,
                                std::size_t limit) {
  if (!(a.context() == b.context())) return "contexts differ";
  GradedClass<C> diff = a - b;
  if (diff.is_zero()) return "";
  std::string out;
  std::size_t shown = 0;
  for (const auto& [m, c] : diff.terms()) {
    if (shown++ == limit) {
      out += "; ...";
      break;
    }
    if (!out.empty()) out += "; ";
    const C* x = a.find(m);
    const C* y = b.find(m);
    out += render_monomial(m, G) + ": lhs " + (x ? coefficient_string(*x) : "0") + " vs rhs " +
           (y ? coefficient_string(*y) : "0");
  }
  return out;
}

}  // namespace hhodge
