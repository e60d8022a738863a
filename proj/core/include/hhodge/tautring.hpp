#pragma once

#include "hhodge/cyclo.hpp"
#include "hhodge/graphs.hpp"
#include "hhodge/rational.hpp"
#include "hhodge/repring.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhodge {

struct TautContext {
  int g = 0;
  int n = 0;
  int D = 0;
  bool operator==(const TautContext&) const = default;
};

int dimension(int g, int n);  // 3g-3+n

// ρ_{Γ*}(ψ₊^{a₊} ψ₋^{a₋}).
struct BoundarySymbol {
  GraphKey graph;
  int a_plus = 0;
  int a_minus = 0;
  auto operator<=>(const BoundarySymbol&) const = default;
};

// ψ_1^{e_1}⋯ψ_n^{e_n} · Π κ_a^{f_a}, or a lone boundary symbol.
struct Monomial {
  std::vector<int> psi;    // length n
  std::vector<int> kappa;  // kappa[a-1], trailing zeros stripped
  std::optional<BoundarySymbol> boundary;

  int degree() const;
  bool is_one() const;
  bool operator==(const Monomial&) const = default;
  friend bool operator<(const Monomial& a, const Monomial& b);
};

Monomial one_monomial(int n);
Monomial psi_monomial(int n, int i, int e = 1);
Monomial kappa_monomial(int n, int a, int e = 1);
Monomial boundary_monomial(int n, const GraphKey& graph, int a_plus, int a_minus);
// Product of boundary-free monomials.
Monomial multiply(const Monomial& a, const Monomial& b);

// Grammar: `1`, `psi_1^2 * kappa_1`, `bd[loop;m+=s](psi+^1 psi-^0)`,
// `bd[tree;g1=0;tails1={1,2};m+=s](psi+^0 psi-^0)`; exponents of 1 are omitted outside bd.
std::string render_monomial(const Monomial& m, const FiniteGroup& G);
// Inverse of render_monomial. Throws std::invalid_argument.
Monomial parse_monomial(const std::string& text, int g, int n, const FiniteGroup& G);

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static Rational scale(const Rational& c, const Rational& q) { return c * q; }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static Rational dual(const Rational& c) { return c; }
};

template <>
struct CoeffTraits<Cyclotomic> {
  static bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
  static Cyclotomic scale(const Cyclotomic& c, const Rational& q) { return c * q; }
  static Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
  static Cyclotomic dual(const Cyclotomic& c) { return c.conjugate(); }
};

template <>
struct CoeffTraits<VirtualCharacter> {
  static bool is_zero(const VirtualCharacter& c) { return c.is_zero(); }
  static VirtualCharacter scale(const VirtualCharacter& c, const Rational& q) { return c * q; }
  static VirtualCharacter mul(const VirtualCharacter& a, const VirtualCharacter& b) { return a * b; }
  static VirtualCharacter dual(const VirtualCharacter& c) { return dual_char(c); }
};

// Element of the free graded ring on ψ_i, κ_a and boundary symbols, truncated at degree D.
template <class C>
class GradedClass {
 public:
  using Coeff = C;
  using Traits = CoeffTraits<C>;

  GradedClass() = default;
  explicit GradedClass(TautContext ctx) : ctx_(ctx) {}

  static GradedClass term(TautContext ctx, const Monomial& m, const C& c) {
    GradedClass r(ctx);
    r.add_term(m, c);
    return r;
  }
  static GradedClass scalar(TautContext ctx, const C& c) { return term(ctx, one_monomial(ctx.n), c); }

  const TautContext& context() const { return ctx_; }
  const std::map<Monomial, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const C* find(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }
  bool has_boundary() const {
    for (const auto& [m, c] : terms_)
      if (m.boundary) return true;
    return false;
  }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  // Ignores terms above the truncation degree.
  void add_term(const Monomial& m, const C& c) {
    if (m.degree() > ctx_.D || Traits::is_zero(c)) return;
    if (static_cast<int>(m.psi.size()) != ctx_.n) throw std::invalid_argument("monomial has wrong number of tails");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (Traits::is_zero(it->second)) terms_.erase(it);
  }

  GradedClass degree_part(int d) const {
    GradedClass r(ctx_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }
  GradedClass truncated(int D) const {
    TautContext ctx = ctx_;
    ctx.D = std::min(D, ctx_.D);
    GradedClass r(ctx);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= ctx.D) r.terms_.emplace(m, c);
    return r;
  }
  template <class F>
  auto map_coefficients(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const C&>()))>;
    GradedClass<R> r(ctx_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  GradedClass operator-() const {
    GradedClass r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, Traits::scale(c, Rational(-1)));
    return r;
  }
  GradedClass& operator+=(const GradedClass& o) {
    require_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GradedClass& operator-=(const GradedClass& o) {
    require_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Traits::scale(c, Rational(-1)));
    return *this;
  }
  GradedClass& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c = Traits::scale(c, q);
    return *this;
  }
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const Rational& q) { return a *= q; }
  friend GradedClass operator*(const Rational& q, GradedClass a) { return a *= q; }

  friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    return multiply_with(a, b, [](const C& x, const C& y) { return Traits::mul(x, y); });
  }

  // Product with coefficients combined by f; enforces the boundary-product rule.
  template <class B, class F>
  static GradedClass multiply_with(const GradedClass& a, const GradedClass<B>& b, F&& f) {
    if (!(a.context() == b.context())) throw std::invalid_argument("context mismatch");
    if ((a.has_boundary() && !b.is_scalar()) || (b.has_boundary() && !a.is_scalar()))
      throw std::invalid_argument("boundary product undefined");
    GradedClass r(a.context());
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) {
        if (ma.degree() + mb.degree() > a.context().D) continue;
        Monomial m = ma.boundary ? ma : (mb.boundary ? mb : multiply(ma, mb));
        r.add_term(m, f(ca, cb));
      }
    return r;
  }

  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

 private:
  void require_context(const GradedClass& o) const {
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("context mismatch");
  }

  TautContext ctx_;
  std::map<Monomial, C> terms_;
};

using TautClass = GradedClass<Rational>;
using CycTautClass = GradedClass<Cyclotomic>;
using RepTautClass = GradedClass<VirtualCharacter>;

TautClass psi_class(const TautContext& ctx, int i);
TautClass kappa_class(const TautContext& ctx, int a);
TautClass boundary_class(const TautContext& ctx, const GraphKey& graph, int a_plus, int a_minus);
TautClass scalar_class(const TautContext& ctx, const Rational& q);

enum class TautOp { add, scale, mul };

// For scale, b must be a scalar class.
template <class C>
GradedClass<C> taut_arith(TautOp op, const GradedClass<C>& a, const GradedClass<C>& b) {
  switch (op) {
    case TautOp::add:
      return a + b;
    case TautOp::mul:
      return a * b;
    case TautOp::scale:
      if (!b.is_scalar()) throw std::invalid_argument("scale needs a scalar operand");
      return a * b;
  }
  throw std::invalid_argument("unknown tautological op");
}

// c ⊗ W.
RepTautClass tensor(const TautClass& a, const VirtualCharacter& w);
// Product of a Rep-valued class with a rational class.
RepTautClass mul(const RepTautClass& a, const TautClass& b);
// a ⊗ 𝟙.
RepTautClass embed(const TautClass& a, const GroupPtr& G);
CycTautClass chi_gamma(const RepTautClass& a, int gamma);
// Character at the identity; throws std::domain_error if some value is irrational.
TautClass chi_one(const RepTautClass& a);
// Coefficientwise η(W, ·).
TautClass eta_project(const VirtualCharacter& w, const RepTautClass& a);
// Multiplies the degree-d part by (-1)^d and dualizes coefficients.
template <class C>
GradedClass<C> dual_parity(const GradedClass<C>& a) {
  GradedClass<C> r(a.context());
  for (const auto& [m, c] : a.terms()) {
    C d = CoeffTraits<C>::dual(c);
    r.add_term(m, m.degree() % 2 == 0 ? d : CoeffTraits<C>::scale(d, Rational(-1)));
  }
  return r;
}

enum class ConversionDirection { psi_cover_to_base, kappa_cover_to_base, kappa_mumford_to_ac };

struct ConversionData {
  std::vector<int> tail_orders;                   // |m_i|
  int group_order = 1;                            // |G|
  std::function<int(const GraphKey&)> edge_order;  // |m₊|, used for ψ₊, ψ₋ inside boundary symbols
};

// Reads `input`'s generators as cover-side (ψ̃, κ̃) or Mumford (κ') classes and rewrites
// them in the base basis: ψ̃_i = ψ_i/|m_i|, κ̃_a = |G|κ_a, κ'_a = κ_a - Σ_i ψ_i^a.
TautClass convert_classes(ConversionDirection direction, const TautClass& input, const ConversionData& data);
ConversionDirection parse_conversion_direction(const std::string& name);

std::string render_class(const TautClass& a, const FiniteGroup& G);

}  // namespace hhodge
