#pragma once

#include "hhodge/cyclo.hpp"
#include "hhodge/group.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hhodge {

// A Q-linear combination of characters, stored as one value per conjugacy class
// (classes ordered by smallest element index).
class VirtualCharacter {
 public:
  VirtualCharacter() = default;
  VirtualCharacter(GroupPtr group, std::vector<Cyclotomic> class_values);

  static VirtualCharacter zero(GroupPtr group);
  static VirtualCharacter trivial(GroupPtr group);
  static VirtualCharacter regular(GroupPtr group);
  // f must be a class function; it is sampled at each class's smallest element.
  static VirtualCharacter from_class_function(GroupPtr group, const std::function<Cyclotomic(int)>& f);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at_class(int c) const { return values_.at(c); }
  const Cyclotomic& at(int element) const { return values_.at(group_->class_of(element)); }
  const Cyclotomic& dimension() const { return values_.front(); }
  bool is_zero() const;
  bool is_rational_valued() const;

  VirtualCharacter operator-() const;
  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator-=(const VirtualCharacter& o);
  // Tensor product.
  VirtualCharacter& operator*=(const VirtualCharacter& o);
  VirtualCharacter& operator*=(const Rational& q);
  VirtualCharacter& operator*=(const Cyclotomic& z);

  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
  friend VirtualCharacter operator*(VirtualCharacter a, const VirtualCharacter& b) { return a *= b; }
  friend VirtualCharacter operator*(VirtualCharacter a, const Rational& q) { return a *= q; }
  friend VirtualCharacter operator*(const Rational& q, VirtualCharacter a) { return a *= q; }

  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b);
  friend bool operator!=(const VirtualCharacter& a, const VirtualCharacter& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void require_same_group(const VirtualCharacter& o) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

VirtualCharacter regular_character(const GroupPtr& g);
VirtualCharacter trivial_character(const GroupPtr& g);

// V_m^k as a character of ⟨m⟩: value e(-k·j/|m|) at m^j.
VirtualCharacter cyclic_irrep_char(const FiniteGroup& g, int m, long k);

VirtualCharacter induce(const FiniteGroup& g, const Subgroup& h, const VirtualCharacter& chi);
VirtualCharacter restrict(const FiniteGroup& g, const Subgroup& h, const VirtualCharacter& chi);
// Ind_{⟨m⟩}^G V_m^k.
VirtualCharacter induce_cyclic(const FiniteGroup& g, int m, long k);
// ℂ[G/H] = Ind_H^G 𝟙.
VirtualCharacter coset_character(const FiniteGroup& g, const Subgroup& h);

// (1/|G|) Σ_γ a(γ)·conj(b(γ)); throws std::domain_error if not rational.
Rational eta(const VirtualCharacter& a, const VirtualCharacter& b);
// W - η(𝟙, W)·ℂ[G].
VirtualCharacter i_g(const VirtualCharacter& chi);
// Value at γ is χ(γ⁻¹).
VirtualCharacter dual_char(const VirtualCharacter& chi);
// Multiplicity of V_m^k in Res_{⟨m⟩} W.
Rational d_mk(const VirtualCharacter& w, int m, long k);
// χ ↦ χ ∘ θ⁻¹ for an automorphism θ given as an element permutation.
VirtualCharacter transport(const VirtualCharacter& chi, const std::vector<int>& theta);

}  // namespace hhodge
