#pragma once

#include <memory>
#include <string>
#include <vector>

namespace hhodge {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
 public:
  Subgroup() = default;
  // Validates closure; `elements` may be in any order and is stored sorted.
  Subgroup(const GroupPtr& parent, std::vector<int> elements);

  GroupPtr parent() const { return parent_.lock(); }
  const FiniteGroup& parent_ref() const { return *raw_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int parent_element) const;
  // Position of a parent element in elements(), which is also its index in as_group().
  int local_index(int parent_element) const;
  // The subgroup as a group in its own right, element i being elements()[i].
  // The whole group is its own as_group().
  GroupPtr as_group() const { return local_ ? local_ : parent_.lock(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.raw_ == b.raw_ && a.elements_ == b.elements_;
  }

 private:
  friend class FiniteGroup;
  // Groups cache their cyclic subgroups, so the parent link must not own the parent.
  std::weak_ptr<const FiniteGroup> parent_;
  const FiniteGroup* raw_ = nullptr;
  std::vector<int> elements_;
  std::vector<int> position_;
  GroupPtr local_;
};

struct ConjugacyReport {
  std::vector<std::vector<int>> classes;
  std::vector<int> centralizer_orders;
  std::vector<int> element_orders;
};

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  // Validates the axioms; element 0 must be the identity. Throws std::invalid_argument.
  static GroupPtr from_table(std::vector<std::string> names, std::vector<std::vector<int>> table,
                             std::string spec = "");

  int order() const { return n_; }
  const std::string& spec() const { return spec_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int power(int a, long k) const;
  int conjugate(int g, int m) const { return mul(mul(g, m), inverse_[g]); }
  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  // Throws std::invalid_argument for unknown names.
  int element(const std::string& name) const;

  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int element_order(int a) const { return orders_[a]; }
  int centralizer_order(int a) const { return static_cast<int>(centralizers_[a].size()); }
  const std::vector<int>& centralizer(int a) const { return centralizers_[a]; }
  bool is_abelian() const { return class_count() == n_; }

  // ⟨m⟩; the returned object is shared by all generators of the same subgroup.
  const Subgroup& cyclic_subgroup(int m) const;
  Subgroup generated_subgroup(const std::vector<int>& generators) const;
  Subgroup whole() const;
  Subgroup trivial_subgroup() const;

  bool same_as(const FiniteGroup& o) const;

 private:
  FiniteGroup() = default;
  void build_caches();

  int n_ = 0;
  std::string spec_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> centralizers_;
  std::vector<int> orders_;
  std::vector<int> cyclic_slot_;
  std::vector<Subgroup> cyclic_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

// `cyclic:N`, `dihedral:N`, `sym:N` (N ≤ 5), `product(a,b)`, `file:<path>` or an inline
// Cayley document {"names": [...], "table": [[...]]}.
GroupPtr build_group(const std::string& spec);
GroupPtr parse_cayley_document(const std::string& text, const std::string& spec = "");

ConjugacyReport conjugacy_data(const FiniteGroup& g);
const Subgroup& cyclic_subgroup(const FiniteGroup& g, int m);

// Automorphisms as permutations of element indices.
bool is_automorphism(const FiniteGroup& g, const std::vector<int>& perm);
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);
std::vector<int> inner_automorphism(const FiniteGroup& g, int gamma);
std::vector<int> invert_permutation(const std::vector<int>& perm);

}  // namespace hhodge
