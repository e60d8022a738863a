#include "hhodge/hodge.hpp"

#include "hhodge/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hhodge {

int ModuliContext::graph_index(const GraphKey& key) const {
  for (std::size_t i = 0; i < cut_graphs.size(); ++i)
    if (cut_graphs[i].key() == key) return static_cast<int>(i);
  throw std::invalid_argument("graph not in context");
}

ModuliContext make_context(GroupPtr group, int g, std::vector<int> monodromy, std::optional<int> D) {
  if (!group) throw std::invalid_argument("context without group");
  ModuliContext ctx;
  ctx.group = std::move(group);
  ctx.g = g;
  ctx.n = static_cast<int>(monodromy.size());
  if (g < 0 || 2 * g - 2 + ctx.n <= 0) throw std::invalid_argument("unstable (g, n)");
  for (int m : monodromy)
    if (m < 0 || m >= ctx.group->order()) throw std::invalid_argument("monodromy element out of range");
  ctx.monodromy = std::move(monodromy);
  const int dim = dimension(g, ctx.n);
  ctx.D = D.value_or(dim);
  if (ctx.D < 0 || ctx.D > dim) throw std::invalid_argument("truncation must lie in [0, 3g-3+n]");
  ctx.cut_graphs = enumerate_cut_graphs(g, ctx.n, ctx.monodromy, *ctx.group);
  for (int m : ctx.monodromy) ctx.tail_orders.push_back(ctx.group->element_order(m));
  return ctx;
}

Subgroup default_g0(const ModuliContext& ctx) { return ctx.G().whole(); }

Subgroup principal_component_g0(const ModuliContext& ctx) { return ctx.G().generated_subgroup(ctx.monodromy); }

namespace {

void require_subgroup(const ModuliContext& ctx, const Subgroup& h) {
  if (&h.parent_ref() != ctx.group.get()) throw std::invalid_argument("G0 is not a subgroup of the context group");
}

void require_tail(const ModuliContext& ctx, int i) {
  if (i < 1 || i > ctx.n) throw std::invalid_argument("tail index out of range");
}

Rational frac(long a, long b) { return make_rational(a, b); }

// Σ_{q=0}^{s} (-1)^q ρ(ψ₊^q ψ₋^{s-q}), scaled by c.
void add_alternating_boundary(TautClass& out, const ModuliContext& ctx, const GraphKey& key, int s, const Rational& c) {
  for (int q = 0; q <= s; ++q)
    out.add_term(boundary_monomial(ctx.n, key, q, s - q), q % 2 == 0 ? c : Rational(-c));
}

RepTautClass constant_rep(const ModuliContext& ctx, const VirtualCharacter& w) {
  return RepTautClass::scalar(ctx.taut(), w);
}

}  // namespace

RepTautClass bch_s_puncture(const ModuliContext& ctx, int i) {
  require_tail(ctx, i);
  const FiniteGroup& G = ctx.G();
  const int m = ctx.monodromy[i - 1];
  const int r = ctx.tail_orders[i - 1];
  RepTautClass out(ctx.taut());
  for (int k = 1; k < r; ++k) {
    VirtualCharacter w = induce_cyclic(G, m, k);
    for (int j = 0; j <= ctx.D; ++j) out.add_term(psi_monomial(ctx.n, i, j), w * delta_bernoulli(j + 1, frac(k, r)));
  }
  return out;
}

RepTautClass formal_dual_puncture(const ModuliContext& ctx, int i) {
  require_tail(ctx, i);
  const FiniteGroup& G = ctx.G();
  const int m = ctx.monodromy[i - 1];
  const int r = ctx.tail_orders[i - 1];
  RepTautClass out(ctx.taut());
  for (int k = 1; k < r; ++k) {
    VirtualCharacter w = induce_cyclic(G, m, r - k);
    for (int j = 0; j <= ctx.D; ++j) {
      Rational c = delta_bernoulli(j + 1, frac(k, r));
      out.add_term(psi_monomial(ctx.n, i, j), w * (j % 2 == 0 ? c : Rational(-c)));
    }
  }
  return out;
}

RepTautClass bch_s_node(const ModuliContext& ctx, const DecoratedCutGraph& graph) {
  const GraphKey key = graph.key();
  ctx.graph_index(key);
  const FiniteGroup& G = ctx.G();
  const int r = G.element_order(graph.m_plus);
  const Rational weight = -frac(static_cast<long>(r) * r, 2L * G.order());
  RepTautClass out(ctx.taut());
  for (int k = 1; k < r; ++k) {
    VirtualCharacter w = induce_cyclic(G, graph.m_plus, k);
    for (int j = 1; j <= ctx.D; ++j) {
      Rational c = weight * delta_bernoulli(j + 1, frac(k, r));
      for (int jm = 0; jm <= j - 1; ++jm)
        out.add_term(boundary_monomial(ctx.n, key, j - 1 - jm, jm), w * (jm % 2 == 0 ? c : Rational(-c)));
    }
  }
  return out;
}

TautClass ch_hodge_base(const ModuliContext& ctx) {
  const TautContext tc = ctx.taut();
  const FiniteGroup& G = ctx.G();
  TautClass out = scalar_class(tc, ctx.g);
  for (int j = 2; j <= ctx.D + 1; ++j) {
    Rational c = bernoulli_number(j) / Rational(factorial(j));
    if (sgn(c) == 0) continue;
    out.add_term(kappa_monomial(ctx.n, j - 1), -c);
    for (int i = 1; i <= ctx.n; ++i) out.add_term(psi_monomial(ctx.n, i, j - 1), c);
    for (const auto& graph : ctx.cut_graphs) {
      const long r = G.element_order(graph.m_plus);
      add_alternating_boundary(out, ctx, graph.key(), j - 2, -c * frac(r * r, 2L * G.order()));
    }
  }
  return out;
}

Rational rank_rh(const ModuliContext& ctx, const Subgroup& g0) {
  require_subgroup(ctx, g0);
  const long order = ctx.G().order();
  Rational rk = frac(order, g0.order()) + Rational((ctx.g - 1) * order);
  for (int r : ctx.tail_orders) rk += frac(order, 2) * (Rational(1) - frac(1, r));
  return rk;
}

TautClass ch_hurwitz_hodge_grr(const ModuliContext& ctx, const Subgroup& g0) {
  require_subgroup(ctx, g0);
  const TautContext tc = ctx.taut();
  const FiniteGroup& G = ctx.G();
  const long order = G.order();
  TautClass out = scalar_class(tc, frac(order, g0.order()));
  for (int l = 1; l <= ctx.D + 1; ++l) {
    Rational c = bernoulli_number(l) / Rational(factorial(l));
    if (sgn(c) == 0) continue;
    if (l == 1)
      out.add_term(one_monomial(ctx.n), -c * order * (2 * ctx.g - 2 + ctx.n));
    else
      out.add_term(kappa_monomial(ctx.n, l - 1), -c * order);
    for (int i = 1; i <= ctx.n; ++i) {
      Rational w = c * order;
      for (int e = 0; e < l; ++e) w /= ctx.tail_orders[i - 1];
      out.add_term(psi_monomial(ctx.n, i, l - 1), w);
    }
    if (l < 2) continue;
    for (const auto& graph : ctx.cut_graphs) {
      const int r = G.element_order(graph.m_plus);
      // r₊^{2-ℓ}
      Rational w = -c / 2;
      for (int e = 0; e < l - 2; ++e) w /= r;
      add_alternating_boundary(out, ctx, graph.key(), l - 2, w);
    }
  }
  return out;
}

RepTautClass HodgeComponents::assemble(const ModuliContext& ctx, const Subgroup& g0) const {
  const GroupPtr& G = ctx.group;
  RepTautClass out = constant_rep(ctx, coset_character(*G, g0));
  out += tensor(base - scalar_class(ctx.taut(), 1), VirtualCharacter::regular(G));
  for (const auto& s : punctures) out += s;
  for (const auto& s : nodes) out += s;
  return out;
}

HodgeComponents compute_components(const ModuliContext& ctx, const Subgroup& g0) {
  require_subgroup(ctx, g0);
  HodgeComponents parts;
  parts.base = ch_hodge_base(ctx);
  for (int i = 1; i <= ctx.n; ++i) parts.punctures.push_back(bch_s_puncture(ctx, i));
  for (const auto& graph : ctx.cut_graphs) parts.nodes.push_back(bch_s_node(ctx, graph));
  parts.grr = ch_hurwitz_hodge_grr(ctx, g0);
  return parts;
}

RepTautClass bch_hurwitz_hodge(const ModuliContext& ctx, const Subgroup& g0) {
  require_subgroup(ctx, g0);
  HodgeComponents parts;
  parts.base = ch_hodge_base(ctx);
  for (int i = 1; i <= ctx.n; ++i) parts.punctures.push_back(bch_s_puncture(ctx, i));
  for (const auto& graph : ctx.cut_graphs) parts.nodes.push_back(bch_s_node(ctx, graph));
  return parts.assemble(ctx, g0);
}

RepTautClass formal_dual_bch(const ModuliContext& ctx, const Subgroup& g0) {
  require_subgroup(ctx, g0);
  const GroupPtr& G = ctx.group;
  RepTautClass out = constant_rep(ctx, coset_character(*G, g0));
  out += tensor(dual_parity(ch_hodge_base(ctx)) - scalar_class(ctx.taut(), 1), VirtualCharacter::regular(G));
  for (int i = 1; i <= ctx.n; ++i) out += formal_dual_puncture(ctx, i);
  for (const auto& graph : ctx.cut_graphs) out -= bch_s_node(ctx, graph);
  return out;
}

LocalRepSeries LocalRepSeries::constant(const VirtualCharacter& chi) {
  LocalRepSeries s;
  s.terms.emplace(std::make_pair(0, 0), chi);
  return s;
}

namespace {

using Local = std::map<std::pair<int, int>, VirtualCharacter>;

void local_add(Local& s, int a, int b, const VirtualCharacter& w) {
  auto [it, fresh] = s.emplace(std::make_pair(a, b), w);
  if (!fresh) it->second += w;
}

Local local_mul(const Local& x, const Local& y, int order) {
  Local out;
  for (const auto& [ea, wa] : x)
    for (const auto& [eb, wb] : y) {
      int a = ea.first + eb.first, b = ea.second + eb.second;
      if (a + b <= order) local_add(out, a, b, wa * wb);
    }
  return out;
}

// Σ_k 𝔉_{r,k}(ψ) V_m^k in slot 0 (ψ = first variable) or slot 1.
Local frk_local(const FiniteGroup& G, int m, int order, int slot) {
  const int r = G.element_order(m);
  Local out;
  for (int k = 1; k < r; ++k) {
    VirtualCharacter v = cyclic_irrep_char(G, m, k);
    for (int j = 0; j <= order; ++j) {
      Rational c = delta_bernoulli(j + 1, make_rational(k, r));
      if (sgn(c) == 0) continue;
      local_add(out, slot == 0 ? j : 0, slot == 0 ? 0 : j, v * c);
    }
  }
  if (out.empty()) out.emplace(std::make_pair(0, 0), VirtualCharacter::zero(G.cyclic_subgroup(m).as_group()));
  return out;
}

// (e^u - 1)/u with u = (ψ₊ + ψ₋)/r: coefficient of ψ₊^a ψ₋^b is C(a+b, a)/(r^{a+b} (a+b+1)!).
Local difference_quotient_local(const GroupPtr& H, int r, int order) {
  Local out;
  VirtualCharacter one = VirtualCharacter::trivial(H);
  for (int d = 0; d <= order; ++d) {
    Rational base = Rational(1) / Rational(factorial(d + 1));
    for (int e = 0; e < d; ++e) base /= r;
    for (int a = 0; a <= d; ++a) local_add(out, a, d - a, one * Rational(base * Rational(binomial(d, a))));
  }
  return out;
}

void require_over(const Local& s, const GroupPtr& H, const char* what) {
  for (const auto& [e, w] : s)
    if (!same_group(w.group(), H)) throw std::invalid_argument(std::string(what) + " character is not over the cyclic subgroup");
}

}  // namespace

EquivariantSheafData structure_sheaf_data(const ModuliContext& ctx) {
  const FiniteGroup& G = ctx.G();
  EquivariantSheafData F;
  F.base_class = scalar_class(ctx.taut(), 1) - ch_hodge_base(ctx);
  F.rank = 1;
  for (int m : ctx.monodromy)
    F.puncture.push_back(LocalRepSeries::constant(VirtualCharacter::trivial(G.cyclic_subgroup(m).as_group())));
  for (const auto& graph : ctx.cut_graphs) {
    auto one = LocalRepSeries::constant(VirtualCharacter::trivial(G.cyclic_subgroup(graph.m_plus).as_group()));
    F.node.emplace_back(one, one);
  }
  return F;
}

EquivariantSheafData dualizing_sheaf_data(const ModuliContext& ctx) {
  const FiniteGroup& G = ctx.G();
  EquivariantSheafData F;
  F.base_class = dual_parity(ch_hodge_base(ctx)) - scalar_class(ctx.taut(), 1);
  F.rank = 1;
  // σ_i*ω is the cotangent line of the cover at the marked point: Chern character e^{ψ_i/r_i}, acted on by V_{m_i}.
  for (int i = 0; i < ctx.n; ++i) {
    const int m = ctx.monodromy[i], r = ctx.tail_orders[i];
    VirtualCharacter v = cyclic_irrep_char(G, m, 1);
    LocalRepSeries s;
    Rational c = 1;
    for (int j = 0; j <= ctx.D; ++j) {
      s.terms.emplace(std::make_pair(j, 0), v * c);
      c /= Rational((j + 1) * r);
    }
    F.puncture.push_back(std::move(s));
  }
  for (const auto& graph : ctx.cut_graphs) {
    auto one = LocalRepSeries::constant(VirtualCharacter::trivial(G.cyclic_subgroup(graph.m_plus).as_group()));
    F.node.emplace_back(one, one);
  }
  return F;
}

RepTautClass bch_pushforward_general(const ModuliContext& ctx, const EquivariantSheafData& F) {
  const FiniteGroup& G = ctx.G();
  if (!(F.base_class.context() == ctx.taut())) throw std::invalid_argument("base class context differs");
  if (static_cast<int>(F.puncture.size()) != ctx.n) throw std::invalid_argument("need one puncture series per tail");
  if (F.node.size() != ctx.cut_graphs.size()) throw std::invalid_argument("need one node pair per cut graph");
  auto check_rank = [&](const Local& s) {
    auto it = s.find({0, 0});
    Cyclotomic dim = it == s.end() ? Cyclotomic() : it->second.dimension();
    if (dim != Cyclotomic(F.rank)) throw std::invalid_argument("character dimension differs from the rank");
  };
  RepTautClass out = tensor(F.base_class, VirtualCharacter::regular(ctx.group));
  for (int i = 0; i < ctx.n; ++i) {
    const int m = ctx.monodromy[i];
    const Subgroup& h = G.cyclic_subgroup(m);
    require_over(F.puncture[i].terms, h.as_group(), "puncture");
    check_rank(F.puncture[i].terms);
    Local s = local_mul(F.puncture[i].terms, frk_local(G, m, ctx.D, 0), ctx.D);
    for (const auto& [e, w] : s) out.add_term(psi_monomial(ctx.n, i + 1, e.first), -induce(G, h, i_g(w)));
  }
  if (ctx.D == 0) return out;
  for (std::size_t idx = 0; idx < ctx.cut_graphs.size(); ++idx) {
    const auto& graph = ctx.cut_graphs[idx];
    const Subgroup& h = G.cyclic_subgroup(graph.m_plus);
    const auto& [cp, cm] = F.node[idx];
    require_over(cp.terms, h.as_group(), "node");
    require_over(cm.terms, h.as_group(), "node");
    check_rank(cp.terms);
    check_rank(cm.terms);
    const int r = G.element_order(graph.m_plus);
    const int order = ctx.D - 1;
    Local c = cp.terms;
    for (const auto& [e, w] : cm.terms) local_add(c, e.first, e.second, w);
    Local s = local_mul(c, frk_local(G, graph.m_plus, order, 0), order);
    s = local_mul(s, frk_local(G, graph.m_minus, order, 1), order);
    s = local_mul(s, difference_quotient_local(h.as_group(), r, order), order);
    const Rational weight = make_rational(r, 4L * G.order());
    for (const auto& [e, w] : s)
      out.add_term(boundary_monomial(ctx.n, graph.key(), e.first, e.second), i_g(induce(G, h, w)) * weight);
  }
  return out;
}

std::string KExpression::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, c] : symbols) {
    if (sgn(c) == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str() << "*";
    os << name;
  }
  if (!trivial_part.is_zero()) os << (first ? "" : " + ") << trivial_part.to_string() << "*O";
  if (first && trivial_part.is_zero()) os << "0";
  return os.str();
}

KExpression boundary_restriction_crrt(const ModuliContext& ctx, const DecoratedCutGraph& graph, const Subgroup& g0,
                                      const std::vector<Subgroup>& cut_subgroups) {
  require_subgroup(ctx, g0);
  const FiniteGroup& G = ctx.G();
  const std::size_t arity = graph.kind == GraphKind::loop ? 1 : 2;
  if (cut_subgroups.size() != arity)
    throw std::invalid_argument(graph.kind == GraphKind::loop ? "loop restriction needs G_cut"
                                                              : "tree restriction needs G+ and G-");
  for (const auto& h : cut_subgroups) require_subgroup(ctx, h);
  KExpression k;
  k.symbols["crrt_cut"] = 1;
  k.trivial_part = coset_character(G, g0) + coset_character(G, G.cyclic_subgroup(graph.m_plus));
  for (const auto& h : cut_subgroups) k.trivial_part -= coset_character(G, h);
  return k;
}

Subgroup transport_subgroup(const std::vector<int>& theta, const Subgroup& h) {
  std::vector<int> image;
  for (int x : h.elements()) image.push_back(theta.at(x));
  return Subgroup(h.parent(), std::move(image));
}

std::pair<ModuliContext, RepTautClass> aut_transport(const std::vector<int>& theta, const ModuliContext& ctx,
                                                     const RepTautClass& cls) {
  const FiniteGroup& G = ctx.G();
  if (!is_automorphism(G, theta)) throw std::invalid_argument("not an automorphism");
  if (!(cls.context() == ctx.taut())) throw std::invalid_argument("class context differs");
  std::vector<int> m;
  for (int x : ctx.monodromy) m.push_back(theta[x]);
  ModuliContext moved = make_context(ctx.group, ctx.g, std::move(m), ctx.D);
  const std::vector<int> inv = invert_permutation(theta);
  RepTautClass out(moved.taut());
  for (const auto& [mono, w] : cls.terms()) {
    Monomial t = mono;
    if (t.boundary) t.boundary->graph.m_plus = theta[t.boundary->graph.m_plus];
    out.add_term(t, VirtualCharacter::from_class_function(ctx.group, [&](int x) { return w.at(inv[x]); }));
  }
  return {std::move(moved), std::move(out)};
}

RepTautClass degree_one_closed_form(const ModuliContext& ctx) {
  const FiniteGroup& G = ctx.G();
  const GroupPtr& gp = ctx.group;
  const long order = G.order();
  RepTautClass out(ctx.taut());
  if (ctx.D < 1) return out;
  const VirtualCharacter reg = VirtualCharacter::regular(gp);
  out.add_term(kappa_monomial(ctx.n, 1), reg * frac(-1, 12));
  for (int i = 1; i <= ctx.n; ++i) {
    const int r = ctx.tail_orders[i - 1];
    VirtualCharacter w = reg * frac(1, 12);
    for (int k = 1; k < r; ++k)
      w += induce_cyclic(G, ctx.monodromy[i - 1], k) * frac(static_cast<long>(k) * (k - r), 2L * r * r);
    out.add_term(psi_monomial(ctx.n, i, 1), w);
  }
  for (const auto& graph : ctx.cut_graphs) {
    const long r = G.element_order(graph.m_plus);
    VirtualCharacter w = reg * frac(r * r, 24 * order);
    for (int k = 1; k < r; ++k) w += induce_cyclic(G, graph.m_plus, k) * frac(k * (k - r), 4 * order);
    out.add_term(boundary_monomial(ctx.n, graph.key(), 0, 0), -w);
  }
  return out;
}

TautClass degree_one_rank_closed_form(const ModuliContext& ctx) {
  const long order = ctx.G().order();
  TautClass out(ctx.taut());
  if (ctx.D < 1) return out;
  out.add_term(kappa_monomial(ctx.n, 1), frac(-order, 12));
  for (int i = 1; i <= ctx.n; ++i) {
    const long r = ctx.tail_orders[i - 1];
    out.add_term(psi_monomial(ctx.n, i, 1), frac(order, 12 * r * r));
  }
  for (const auto& graph : ctx.cut_graphs) out.add_term(boundary_monomial(ctx.n, graph.key(), 0, 0), frac(-1, 24));
  return out;
}

bool IdentityReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const IdentityEntry& e) { return e.passed; });
}

const IdentityEntry* IdentityReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::string coefficient_string(const Rational& q) { return q.get_str(); }
std::string coefficient_string(const Cyclotomic& z) { return z.to_string(); }
std::string coefficient_string(const VirtualCharacter& w) { return w.to_string(); }

IdentityReport verify_components(const ModuliContext& ctx, const Subgroup& g0, const HodgeComponents& parts) {
  require_subgroup(ctx, g0);
  const FiniteGroup& G = ctx.G();
  const GroupPtr& gp = ctx.group;
  const TautContext tc = ctx.taut();
  const VirtualCharacter reg = VirtualCharacter::regular(gp);
  IdentityReport report;
  auto record = [&](const std::string& name, const std::string& diff) {
    report.entries.push_back({name, diff.empty(), diff});
  };

  const RepTautClass bch = parts.assemble(ctx, g0);

  {
    RepTautClass dual = constant_rep(ctx, coset_character(G, g0));
    dual += tensor(dual_parity(parts.base) - scalar_class(tc, 1), reg);
    for (const auto& s : parts.punctures) dual += dual_parity(s);
    for (const auto& s : parts.nodes) dual -= s;
    VirtualCharacter target = coset_character(G, g0) * Rational(2) + reg * Rational(2 * ctx.g - 2 + ctx.n);
    for (int m : ctx.monodromy) target -= coset_character(G, G.cyclic_subgroup(m));
    record("mumford", describe_difference(bch + dual, constant_rep(ctx, target), G));
  }

  {
    std::string diff;
    for (int m = 0; m < G.order() && diff.empty(); ++m) {
      const int r = G.element_order(m);
      for (int k = 0; k < r && diff.empty(); ++k) {
        VirtualCharacter w = induce_cyclic(G, m, k);
        VirtualCharacter wd = dual_char(w);
        TautClass a = eta_project(w, bch), b = eta_project(wd, bch);
        TautClass self = eta_project(w + wd, bch);
        for (int j = 1; j <= ctx.D && diff.empty(); ++j) {
          TautClass lhs = a.degree_part(j) + (j % 2 == 0 ? b.degree_part(j) : -b.degree_part(j));
          if (!lhs.is_zero())
            diff = "W = Ind V_" + G.name(m) + "^" + std::to_string(k) + ", degree " + std::to_string(j) + ": " +
                   describe_difference(lhs, TautClass(tc), G);
          if (diff.empty() && j >= 2 && j % 2 == 0 && !self.degree_part(j).is_zero())
            diff = "self-dual W from V_" + G.name(m) + "^" + std::to_string(k) + ", degree " + std::to_string(j) +
                   ": " + describe_difference(self.degree_part(j), TautClass(tc), G);
        }
      }
    }
    record("parity", diff);
  }

  {
    std::string diff;
    try {
      diff = describe_difference(chi_one(bch), parts.grr, G);
    } catch (const std::exception& e) {
      diff = e.what();
    }
    record("consistency", diff);
  }

  {
    std::string diff;
    for (int i = 0; i < ctx.n && diff.empty(); ++i) {
      VirtualCharacter target = reg - coset_character(G, G.cyclic_subgroup(ctx.monodromy[i]));
      std::string d = describe_difference(parts.punctures[i] + dual_parity(parts.punctures[i]),
                                          constant_rep(ctx, target), G);
      if (!d.empty()) diff = "tail " + std::to_string(i + 1) + ": " + d;
    }
    record("puncture_duality", diff);
  }

  {
    std::string diff = describe_difference(bch.degree_part(1), degree_one_closed_form(ctx), G);
    if (diff.empty()) {
      try {
        diff = describe_difference(chi_one(bch.degree_part(1)), degree_one_rank_closed_form(ctx), G);
        if (!diff.empty()) diff = "rank: " + diff;
      } catch (const std::exception& e) {
        diff = e.what();
      }
    }
    record("degree_one", diff);
  }
  return report;
}

IdentityReport verify_identities(const ModuliContext& ctx, const Subgroup& g0) {
  return verify_components(ctx, g0, compute_components(ctx, g0));
}

RelativeRHSummary relative_rh_summary(const ModuliContext& ctx, const Subgroup& g0) {
  require_subgroup(ctx, g0);
  const FiniteGroup& G = ctx.G();
  RelativeRHSummary s;
  s.components = make_rational(G.order(), g0.order());
  s.group_order = G.order();
  std::ostringstream os;
  os << "Ch(crrt) = " << s.components.get_str() << " + " << G.order() << "*(Ch(R) - 1)";
  for (int i = 1; i <= ctx.n; ++i) {
    TautClass t = chi_one(bch_s_puncture(ctx, i));
    std::vector<Rational> series(ctx.D + 1);
    for (int j = 0; j <= ctx.D; ++j)
      if (const Rational* c = t.find(psi_monomial(ctx.n, i, j))) series[j] = *c;
    s.puncture_series.push_back(series);
    os << "\n  + " << G.order() << "/" << ctx.tail_orders[i - 1] << " * F_" << ctx.tail_orders[i - 1] << "(exp(psi_"
       << i << "/" << ctx.tail_orders[i - 1] << "), 1) = " << render_class(t, G);
  }
  for (const auto& graph : ctx.cut_graphs) {
    TautClass t = chi_one(bch_s_node(ctx, graph));
    std::map<std::pair<int, int>, Rational> series;
    for (const auto& [m, c] : t.terms()) series[{m.boundary->a_plus, m.boundary->a_minus}] = c;
    s.node_series.push_back(series);
    if (t.is_zero()) continue;
    const int r = G.element_order(graph.m_plus);
    // Constant term -1/2 * IF_r(1, 1, 1); higher terms carry the pushforward's Todd correction.
    os << "\n  - " << r << "/2 * rho_*[(A(psi+) - A(-psi-))/(psi+ + psi-)], A(t) = F_" << r << "(exp(t/" << r
       << "), 1): " << render_class(t, G);
  }
  s.rendered = os.str();
  return s;
}

}  // namespace hhodge
