#include "hhodge/group.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hhodge {

Subgroup::Subgroup(const GroupPtr& parent, std::vector<int> elements)
    : parent_(parent), raw_(parent.get()), elements_(std::move(elements)) {
  if (!parent) throw std::invalid_argument("subgroup without parent group");
  const FiniteGroup& g = *parent;
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  position_.assign(g.order(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    int x = elements_[i];
    if (x < 0 || x >= g.order()) throw std::invalid_argument("subgroup element out of range");
    position_[x] = static_cast<int>(i);
  }
  if (elements_.empty() || elements_.front() != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  for (int a : elements_) {
    if (position_[g.inv(a)] < 0) throw std::invalid_argument("subgroup not closed under inverse");
    for (int b : elements_)
      if (position_[g.mul(a, b)] < 0) throw std::invalid_argument("subgroup not closed under product");
  }
  if (order() == g.order()) return;
  const int h = order();
  std::vector<std::vector<int>> table(h, std::vector<int>(h));
  std::vector<std::string> names(h);
  for (int i = 0; i < h; ++i) {
    names[i] = g.name(elements_[i]);
    for (int j = 0; j < h; ++j) table[i][j] = position_[g.mul(elements_[i], elements_[j])];
  }
  std::ostringstream spec;
  spec << "sub(" << g.spec() << ";";
  for (int i = 0; i < h; ++i) spec << (i ? "," : "") << elements_[i];
  spec << ")";
  local_ = FiniteGroup::from_table(std::move(names), std::move(table), spec.str());
}

bool Subgroup::contains(int x) const { return x >= 0 && x < static_cast<int>(position_.size()) && position_[x] >= 0; }

int Subgroup::local_index(int x) const {
  if (!contains(x)) throw std::invalid_argument("element not in subgroup");
  return position_[x];
}

GroupPtr FiniteGroup::from_table(std::vector<std::string> names, std::vector<std::vector<int>> table,
                                 std::string spec) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  if (static_cast<int>(names.size()) != n) throw std::invalid_argument("names and table size differ");
  std::shared_ptr<FiniteGroup> g(new FiniteGroup);
  g->n_ = n;
  g->spec_ = std::move(spec);
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw std::invalid_argument("table is not square");
    std::vector<char> seen(n, 0);
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
      if (seen[v]) throw std::invalid_argument("table row is not a permutation");
      seen[v] = 1;
      g->table_[i * n + j] = v;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      int v = g->table_[i * n + j];
      if (seen[v]) throw std::invalid_argument("table column is not a permutation");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j)
    if (g->mul(0, j) != j || g->mul(j, 0) != j) throw std::invalid_argument("element 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g->mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g->mul(ab, c) != g->mul(a, g->mul(b, c))) throw std::invalid_argument("table is not associative");
    }
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("element names are not distinct");
  }
  g->names_ = std::move(names);
  g->inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == 0) g->inverse_[a] = b;
  g->build_caches();
  return g;
}

void FiniteGroup::build_caches() {
  orders_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
  centralizers_.assign(n_, {});
  for (int a = 0; a < n_; ++a)
    for (int g = 0; g < n_; ++g)
      if (mul(g, a) == mul(a, g)) centralizers_[a].push_back(g);
  class_of_.assign(n_, -1);
  classes_.clear();
  for (int a = 0; a < n_; ++a) {
    if (class_of_[a] >= 0) continue;
    std::vector<int> cls;
    for (int g = 0; g < n_; ++g) {
      int c = conjugate(g, a);
      if (class_of_[c] < 0) {
        class_of_[c] = static_cast<int>(classes_.size());
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  GroupPtr self = shared_from_this();
  cyclic_slot_.assign(n_, -1);
  std::map<std::vector<int>, int> by_set;
  for (int a = 0; a < n_; ++a) {
    std::vector<int> elems;
    for (int x = 0, k = 0; k < orders_[a]; ++k, x = mul(x, a)) elems.push_back(x);
    std::sort(elems.begin(), elems.end());
    auto it = by_set.find(elems);
    if (it == by_set.end()) {
      it = by_set.emplace(elems, static_cast<int>(cyclic_.size())).first;
      cyclic_.emplace_back(self, elems);
    }
    cyclic_slot_[a] = it->second;
  }
}

int FiniteGroup::power(int a, long k) const {
  long r = k % orders_[a];
  if (r < 0) r += orders_[a];
  int x = 0;
  for (long i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

int FiniteGroup::element(const std::string& name) const {
  for (int a = 0; a < n_; ++a)
    if (names_[a] == name) return a;
  if (name.size() > 1 && name[0] == '#') {
    try {
      std::size_t used = 0;
      int idx = std::stoi(name.substr(1), &used);
      if (used == name.size() - 1 && idx >= 0 && idx < n_) return idx;
    } catch (const std::exception&) {
    }
  }
  // Cyclic groups also accept any letter other than `e` for the generator, e.g. s, w, w2.
  if (n_ > 1 && spec_.rfind("cyclic:", 0) == 0 && !name.empty() && std::islower(static_cast<unsigned char>(name[0])) &&
      name[0] != 'e') {
    std::string rest = name.substr(1);
    if (rest.empty()) return 1;
    if (std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return static_cast<int>(std::stol(rest) % n_);
  }
  throw std::invalid_argument("unknown group element '" + name + "'");
}

const Subgroup& FiniteGroup::cyclic_subgroup(int m) const {
  if (m < 0 || m >= n_) throw std::invalid_argument("element index out of range");
  return cyclic_[cyclic_slot_[m]];
}

Subgroup FiniteGroup::generated_subgroup(const std::vector<int>& generators) const {
  std::vector<char> in(n_, 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : generators) {
      if (s < 0 || s >= n_) throw std::invalid_argument("generator out of range");
      int x = mul(elems[i], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  return Subgroup(shared_from_this(), std::move(elems));
}

Subgroup FiniteGroup::whole() const {
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(shared_from_this(), std::move(all));
}

Subgroup FiniteGroup::trivial_subgroup() const { return cyclic_subgroup(0); }

bool FiniteGroup::same_as(const FiniteGroup& o) const { return this == &o || (n_ == o.n_ && table_ == o.table_); }

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && a->same_as(*b)); }

ConjugacyReport conjugacy_data(const FiniteGroup& g) {
  ConjugacyReport r;
  r.classes = g.classes();
  for (int a = 0; a < g.order(); ++a) {
    r.centralizer_orders.push_back(g.centralizer_order(a));
    r.element_orders.push_back(g.element_order(a));
  }
  return r;
}

const Subgroup& cyclic_subgroup(const FiniteGroup& g, int m) { return g.cyclic_subgroup(m); }

namespace {

GroupPtr make_cyclic(int n) {
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(names), std::move(table), "cyclic:" + std::to_string(n));
}

// Index k is r^k, index n+k is s·r^k.
GroupPtr make_dihedral(int n) {
  const int order = 2 * n;
  std::vector<std::string> names(order);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  auto rot = [](int k) { return k == 0 ? std::string() : (k == 1 ? std::string("r") : "r" + std::to_string(k)); };
  for (int k = 0; k < n; ++k) {
    names[k] = k == 0 ? "e" : rot(k);
    names[n + k] = "s" + rot(k);
  }
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int a = x / n, b = x % n, c = y / n, d = y % n;
      int rotation = ((c ? -b : b) + d) % n;
      if (rotation < 0) rotation += n;
      table[x][y] = ((a + c) % 2) * n + rotation;
    }
  return FiniteGroup::from_table(std::move(names), std::move(table), "dihedral:" + std::to_string(n));
}

std::string cycle_name(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

// Permutations in lexicographic order; product (στ)(x) = σ(τ(x)).
GroupPtr make_symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int order = static_cast<int>(perms.size());
  std::vector<std::string> names(order);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i) {
    names[i] = cycle_name(perms[i]);
    for (int j = 0; j < order; ++j) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[i][perms[j][x]];
      table[i][j] = index[c];
    }
  }
  return FiniteGroup::from_table(std::move(names), std::move(table), "sym:" + std::to_string(n));
}

GroupPtr make_product(const FiniteGroup& a, const FiniteGroup& b, std::string spec) {
  const int na = a.order(), nb = b.order(), order = na * nb;
  std::vector<std::string> names(order);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    names[x] = a.name(x / nb) + "." + b.name(x % nb);
    for (int y = 0; y < order; ++y) table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return FiniteGroup::from_table(std::move(names), std::move(table), std::move(spec));
}

int parse_size(const std::string& text, int lo, int hi, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " size '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("bad " + what + " size '" + text + "'");
  if (v < lo || v > hi) throw std::invalid_argument(what + " size out of supported range: " + text);
  return v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  auto e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

GroupPtr parse_cayley_document(const std::string& text, const std::string& spec) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed Cayley document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("table")) throw std::invalid_argument("Cayley document needs a table");
  std::vector<std::vector<int>> table;
  try {
    table = doc.at("table").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("Cayley table must be a list of integer rows");
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    names = doc.at("names").get<std::vector<std::string>>();
  } else {
    for (std::size_t i = 0; i < table.size(); ++i) names.push_back(i == 0 ? "e" : "x" + std::to_string(i));
  }
  return FiniteGroup::from_table(std::move(names), std::move(table), spec.empty() ? "cayley" : spec);
}

GroupPtr build_group(const std::string& raw) {
  const std::string spec = trim(raw);
  if (!spec.empty() && spec.front() == '{') return parse_cayley_document(spec, spec);
  auto colon = spec.find(':');
  if (spec.rfind("product(", 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(8, spec.size() - 9);
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      char c = inner[i];
      if (c == '(' || c == '{' || c == '[') ++depth;
      if (c == ')' || c == '}' || c == ']') --depth;
      if (c == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) throw std::invalid_argument("product needs two factors: " + spec);
    GroupPtr a = build_group(inner.substr(0, split));
    GroupPtr b = build_group(inner.substr(split + 1));
    return make_product(*a, *b, "product(" + a->spec() + "," + b->spec() + ")");
  }
  if (colon == std::string::npos) throw std::invalid_argument("unknown group spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "cyclic") return make_cyclic(parse_size(arg, 1, 360, "cyclic"));
  if (kind == "dihedral") return make_dihedral(parse_size(arg, 1, 180, "dihedral"));
  if (kind == "sym") return make_symmetric(parse_size(arg, 1, 5, "sym"));
  if (kind == "file") {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot read Cayley file '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_cayley_document(buf.str(), spec);
  }
  throw std::invalid_argument("unknown group spec '" + spec + "'");
}

bool is_automorphism(const FiniteGroup& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) return false;
  return true;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  const int n = g.order();
  // Greedy generating set, highest order first.
  std::vector<int> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<char> covered(n, 0);
  covered[0] = 1;
  for (int x : by_order) {
    if (covered[x]) continue;
    gens.push_back(x);
    Subgroup h = g.generated_subgroup(gens);
    std::fill(covered.begin(), covered.end(), 0);
    for (int y : h.elements()) covered[y] = 1;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> images(gens.size());
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (depth == gens.size()) {
      std::vector<int> map(n, -1);
      map[0] = 0;
      std::vector<int> frontier{0};
      for (std::size_t i = 0; i < frontier.size(); ++i)
        for (std::size_t s = 0; s < gens.size(); ++s) {
          int x = g.mul(frontier[i], gens[s]);
          int fx = g.mul(map[frontier[i]], images[s]);
          if (map[x] < 0) {
            map[x] = fx;
            frontier.push_back(x);
          } else if (map[x] != fx) {
            return;
          }
        }
      if (is_automorphism(g, map)) out.push_back(std::move(map));
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (g.element_order(y) != g.element_order(gens[depth])) continue;
      images[depth] = y;
      search(depth + 1);
    }
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> inner_automorphism(const FiniteGroup& g, int gamma) {
  std::vector<int> perm(g.order());
  for (int a = 0; a < g.order(); ++a) perm[a] = g.conjugate(gamma, a);
  return perm;
}

std::vector<int> invert_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv.at(perm[i]) = static_cast<int>(i);
  return inv;
}

}  // namespace hhodge
