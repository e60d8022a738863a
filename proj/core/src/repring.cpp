#include "hhodge/repring.hpp"

#include <sstream>
#include <stdexcept>

namespace hhodge {

VirtualCharacter::VirtualCharacter(GroupPtr group, std::vector<Cyclotomic> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  if (!group_) throw std::invalid_argument("character without group");
  if (static_cast<int>(values_.size()) != group_->class_count())
    throw std::invalid_argument("character needs one value per conjugacy class");
}

VirtualCharacter VirtualCharacter::zero(GroupPtr group) {
  const int c = group->class_count();
  return VirtualCharacter(std::move(group), std::vector<Cyclotomic>(c));
}

VirtualCharacter VirtualCharacter::trivial(GroupPtr group) {
  const int c = group->class_count();
  return VirtualCharacter(std::move(group), std::vector<Cyclotomic>(c, Cyclotomic(1)));
}

VirtualCharacter VirtualCharacter::regular(GroupPtr group) {
  std::vector<Cyclotomic> v(group->class_count());
  v[0] = Cyclotomic(static_cast<long>(group->order()));
  return VirtualCharacter(std::move(group), std::move(v));
}

VirtualCharacter VirtualCharacter::from_class_function(GroupPtr group, const std::function<Cyclotomic(int)>& f) {
  std::vector<Cyclotomic> v;
  v.reserve(group->class_count());
  for (const auto& cls : group->classes()) v.push_back(f(cls.front()));
  return VirtualCharacter(std::move(group), std::move(v));
}

bool VirtualCharacter::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

bool VirtualCharacter::is_rational_valued() const {
  for (const auto& v : values_)
    if (!v.is_rational()) return false;
  return true;
}

void VirtualCharacter::require_same_group(const VirtualCharacter& o) const {
  if (!same_group(group_, o.group_)) throw std::invalid_argument("characters over different groups");
}

VirtualCharacter VirtualCharacter::operator-() const {
  VirtualCharacter r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const VirtualCharacter& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const Rational& q) {
  for (auto& v : values_) v *= q;
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(const Cyclotomic& z) {
  for (auto& v : values_) v *= z;
  return *this;
}

bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
  return same_group(a.group_, b.group_) && a.values_ == b.values_;
}

std::string VirtualCharacter::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i].to_string();
  os << ")";
  return os.str();
}

VirtualCharacter regular_character(const GroupPtr& g) { return VirtualCharacter::regular(g); }
VirtualCharacter trivial_character(const GroupPtr& g) { return VirtualCharacter::trivial(g); }

VirtualCharacter cyclic_irrep_char(const FiniteGroup& g, int m, long k) {
  const Subgroup& h = g.cyclic_subgroup(m);
  const long r = g.element_order(m);
  std::vector<Cyclotomic> per_element(h.order());
  for (long j = 0, x = 0; j < r; ++j, x = g.mul(static_cast<int>(x), m))
    per_element[h.local_index(static_cast<int>(x))] = Cyclotomic::e(-k * j, r);
  return VirtualCharacter::from_class_function(h.as_group(), [&](int local) { return per_element[local]; });
}

VirtualCharacter induce(const FiniteGroup& g, const Subgroup& h, const VirtualCharacter& chi) {
  if (&h.parent_ref() != &g) throw std::invalid_argument("subgroup of a different group");
  if (!same_group(chi.group(), h.as_group())) throw std::invalid_argument("character is not over the subgroup");
  std::vector<Cyclotomic> sum(g.class_count());
  for (int i = 0; i < h.order(); ++i) sum[g.class_of(h.elements()[i])] += chi.at(i);
  for (int c = 0; c < g.class_count(); ++c)
    if (!sum[c].is_zero()) sum[c] *= make_rational(g.order(), static_cast<long>(h.order()) * g.class_size(c));
  return VirtualCharacter(g.shared_from_this(), std::move(sum));
}

VirtualCharacter restrict(const FiniteGroup& g, const Subgroup& h, const VirtualCharacter& chi) {
  if (&h.parent_ref() != &g) throw std::invalid_argument("subgroup of a different group");
  if (!same_group(chi.group(), g.shared_from_this())) throw std::invalid_argument("character is not over the group");
  return VirtualCharacter::from_class_function(h.as_group(), [&](int local) { return chi.at(h.elements()[local]); });
}

VirtualCharacter induce_cyclic(const FiniteGroup& g, int m, long k) {
  return induce(g, g.cyclic_subgroup(m), cyclic_irrep_char(g, m, k));
}

VirtualCharacter coset_character(const FiniteGroup& g, const Subgroup& h) {
  return induce(g, h, VirtualCharacter::trivial(h.as_group()));
}

Rational eta(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (!same_group(a.group(), b.group())) throw std::invalid_argument("eta of characters over different groups");
  const FiniteGroup& g = *a.group();
  Cyclotomic s;
  for (int c = 0; c < g.class_count(); ++c)
    s += Rational(g.class_size(c)) * (a.at_class(c) * b.at_class(c).conjugate());
  auto q = s.as_rational();
  if (!q) throw std::domain_error("eta is not rational: corrupted character input");
  return *q / g.order();
}

VirtualCharacter i_g(const VirtualCharacter& chi) {
  return chi - VirtualCharacter::regular(chi.group()) * eta(VirtualCharacter::trivial(chi.group()), chi);
}

VirtualCharacter dual_char(const VirtualCharacter& chi) {
  const FiniteGroup& g = *chi.group();
  return VirtualCharacter::from_class_function(chi.group(), [&](int x) { return chi.at(g.inv(x)); });
}

Rational d_mk(const VirtualCharacter& w, int m, long k) {
  const FiniteGroup& g = *w.group();
  const Subgroup& h = g.cyclic_subgroup(m);
  return eta(cyclic_irrep_char(g, m, k), restrict(g, h, w));
}

VirtualCharacter transport(const VirtualCharacter& chi, const std::vector<int>& theta) {
  const FiniteGroup& g = *chi.group();
  if (!is_automorphism(g, theta)) throw std::invalid_argument("not an automorphism");
  std::vector<int> inv = invert_permutation(theta);
  return VirtualCharacter::from_class_function(chi.group(), [&](int x) { return chi.at(inv[x]); });
}

}  // namespace hhodge
