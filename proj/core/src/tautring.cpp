#include "hhodge/tautring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hhodge {

int dimension(int g, int n) { return 3 * g - 3 + n; }

int Monomial::degree() const {
  int d = 0;
  for (int e : psi) d += e;
  for (std::size_t a = 0; a < kappa.size(); ++a) d += static_cast<int>(a + 1) * kappa[a];
  if (boundary) d += boundary->a_plus + boundary->a_minus + 1;
  return d;
}

bool Monomial::is_one() const {
  return !boundary && kappa.empty() && std::all_of(psi.begin(), psi.end(), [](int e) { return e == 0; });
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.boundary.has_value() != b.boundary.has_value()) return !a.boundary.has_value();
  if (a.psi != b.psi) return a.psi > b.psi;
  if (a.kappa != b.kappa) return a.kappa > b.kappa;
  return a.boundary < b.boundary;
}

Monomial one_monomial(int n) {
  Monomial m;
  m.psi.assign(n, 0);
  return m;
}

Monomial psi_monomial(int n, int i, int e) {
  if (i < 1 || i > n) throw std::invalid_argument("psi index out of range");
  Monomial m = one_monomial(n);
  m.psi[i - 1] = e;
  return m;
}

Monomial kappa_monomial(int n, int a, int e) {
  if (a < 1) throw std::invalid_argument("kappa_0 is a scalar, not a generator");
  Monomial m = one_monomial(n);
  if (e > 0) {
    m.kappa.assign(a, 0);
    m.kappa[a - 1] = e;
  }
  return m;
}

Monomial boundary_monomial(int n, const GraphKey& graph, int a_plus, int a_minus) {
  if (a_plus < 0 || a_minus < 0) throw std::invalid_argument("negative boundary exponent");
  Monomial m = one_monomial(n);
  m.boundary = BoundarySymbol{graph, a_plus, a_minus};
  return m;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  if (a.boundary || b.boundary) throw std::invalid_argument("boundary product undefined");
  if (a.psi.size() != b.psi.size()) throw std::invalid_argument("monomials with different tail counts");
  Monomial m = a;
  for (std::size_t i = 0; i < m.psi.size(); ++i) m.psi[i] += b.psi[i];
  if (m.kappa.size() < b.kappa.size()) m.kappa.resize(b.kappa.size(), 0);
  for (std::size_t i = 0; i < b.kappa.size(); ++i) m.kappa[i] += b.kappa[i];
  return m;
}

std::string render_monomial(const Monomial& m, const FiniteGroup& G) {
  if (m.boundary) {
    const auto& b = *m.boundary;
    std::ostringstream os;
    if (b.graph.kind == GraphKind::loop) {
      os << "bd[loop;m+=" << G.name(b.graph.m_plus) << "]";
    } else {
      os << "bd[tree;g1=" << b.graph.g1 << ";tails1={";
      auto tails = tails_from_mask(b.graph.tails1, static_cast<int>(m.psi.size()));
      for (std::size_t i = 0; i < tails.size(); ++i) os << (i ? "," : "") << tails[i];
      os << "};m+=" << G.name(b.graph.m_plus) << "]";
    }
    os << "(psi+^" << b.a_plus << " psi-^" << b.a_minus << ")";
    return os.str();
  }
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < m.psi.size(); ++i) {
    if (m.psi[i] == 0) continue;
    std::string f = "psi_" + std::to_string(i + 1);
    if (m.psi[i] != 1) f += "^" + std::to_string(m.psi[i]);
    factors.push_back(f);
  }
  for (std::size_t a = 0; a < m.kappa.size(); ++a) {
    if (m.kappa[a] == 0) continue;
    std::string f = "kappa_" + std::to_string(a + 1);
    if (m.kappa[a] != 1) f += "^" + std::to_string(m.kappa[a]);
    factors.push_back(f);
  }
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out += " * " + factors[i];
  return out;
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " in monomial: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("bad " + what + " in monomial: '" + s + "'");
  return v;
}

// Strips `prefix` from the front of `s`, or throws.
void expect(std::string& s, const std::string& prefix) {
  if (s.rfind(prefix, 0) != 0) throw std::invalid_argument("expected '" + prefix + "' in monomial at '" + s + "'");
  s.erase(0, prefix.size());
}

std::string take_until(std::string& s, char stop) {
  auto pos = s.find(stop);
  if (pos == std::string::npos) throw std::invalid_argument(std::string("expected '") + stop + "' in monomial");
  std::string head = s.substr(0, pos);
  s.erase(0, pos + 1);
  return head;
}

}  // namespace

Monomial parse_monomial(const std::string& text, int g, int n, const FiniteGroup& G) {
  (void)g;
  if (text == "1") return one_monomial(n);
  if (text.rfind("bd[", 0) == 0) {
    std::string s = text.substr(3);
    GraphKey key;
    std::string kind = take_until(s, ';');
    if (kind == "loop") {
      key.kind = GraphKind::loop;
      key.g1 = g - 1;
    } else if (kind == "tree") {
      key.kind = GraphKind::tree;
      expect(s, "g1=");
      key.g1 = parse_int(take_until(s, ';'), "genus");
      expect(s, "tails1={");
      std::string list = take_until(s, '}');
      std::vector<int> tails;
      std::stringstream ls(list);
      for (std::string item; std::getline(ls, item, ',');)
        if (!item.empty()) tails.push_back(parse_int(item, "tail"));
      for (int t : tails)
        if (t < 1 || t > n) throw std::invalid_argument("tail index out of range in monomial");
      key.tails1 = tail_mask(tails);
      expect(s, ";");
    } else {
      throw std::invalid_argument("unknown boundary kind '" + kind + "'");
    }
    expect(s, "m+=");
    key.m_plus = G.element(take_until(s, ']'));
    expect(s, "(psi+^");
    int ap = parse_int(take_until(s, ' '), "exponent");
    expect(s, "psi-^");
    int am = parse_int(take_until(s, ')'), "exponent");
    if (!s.empty()) throw std::invalid_argument("trailing text in monomial");
    return boundary_monomial(n, key, ap, am);
  }
  Monomial m = one_monomial(n);
  std::string rest = text;
  while (true) {
    auto pos = rest.find(" * ");
    std::string factor = rest.substr(0, pos);
    auto caret = factor.find('^');
    std::string base = factor.substr(0, caret);
    int e = caret == std::string::npos ? 1 : parse_int(factor.substr(caret + 1), "exponent");
    if (e < 1) throw std::invalid_argument("non-positive exponent in monomial");
    if (base.rfind("psi_", 0) == 0) {
      int i = parse_int(base.substr(4), "psi index");
      m = multiply(m, psi_monomial(n, i, e));
    } else if (base.rfind("kappa_", 0) == 0) {
      int a = parse_int(base.substr(6), "kappa index");
      m = multiply(m, kappa_monomial(n, a, e));
    } else {
      throw std::invalid_argument("unknown monomial factor '" + factor + "'");
    }
    if (pos == std::string::npos) break;
    rest = rest.substr(pos + 3);
  }
  return m;
}

TautClass psi_class(const TautContext& ctx, int i) { return TautClass::term(ctx, psi_monomial(ctx.n, i), 1); }
TautClass kappa_class(const TautContext& ctx, int a) { return TautClass::term(ctx, kappa_monomial(ctx.n, a), 1); }
TautClass boundary_class(const TautContext& ctx, const GraphKey& graph, int a_plus, int a_minus) {
  return TautClass::term(ctx, boundary_monomial(ctx.n, graph, a_plus, a_minus), 1);
}
TautClass scalar_class(const TautContext& ctx, const Rational& q) { return TautClass::scalar(ctx, q); }

RepTautClass tensor(const TautClass& a, const VirtualCharacter& w) {
  return a.map_coefficients([&](const Rational& q) { return w * q; });
}

RepTautClass mul(const RepTautClass& a, const TautClass& b) {
  return RepTautClass::multiply_with(a, b, [](const VirtualCharacter& w, const Rational& q) { return w * q; });
}

RepTautClass embed(const TautClass& a, const GroupPtr& G) { return tensor(a, VirtualCharacter::trivial(G)); }

CycTautClass chi_gamma(const RepTautClass& a, int gamma) {
  return a.map_coefficients([&](const VirtualCharacter& w) { return w.at(gamma); });
}

TautClass chi_one(const RepTautClass& a) {
  return a.map_coefficients([](const VirtualCharacter& w) {
    auto q = w.dimension().as_rational();
    if (!q) throw std::domain_error("character value at the identity is not rational");
    return *q;
  });
}

TautClass eta_project(const VirtualCharacter& w, const RepTautClass& a) {
  return a.map_coefficients([&](const VirtualCharacter& c) { return eta(w, c); });
}

TautClass convert_classes(ConversionDirection direction, const TautClass& input, const ConversionData& data) {
  const TautContext& ctx = input.context();
  TautClass out(ctx);
  switch (direction) {
    case ConversionDirection::psi_cover_to_base:
      if (static_cast<int>(data.tail_orders.size()) != ctx.n) throw std::invalid_argument("need |m_i| for every tail");
      for (const auto& [m, c] : input.terms()) {
        Rational f = c;
        if (m.boundary) {
          if (!data.edge_order) throw std::invalid_argument("need edge orders for boundary terms");
          int r = data.edge_order(m.boundary->graph);
          for (int j = 0; j < m.boundary->a_plus + m.boundary->a_minus; ++j) f /= r;
        }
        for (int i = 0; i < ctx.n; ++i)
          for (int j = 0; j < m.psi[i]; ++j) f /= data.tail_orders[i];
        out.add_term(m, f);
      }
      return out;
    case ConversionDirection::kappa_cover_to_base:
      for (const auto& [m, c] : input.terms()) {
        Rational f = c;
        for (int e : m.kappa)
          for (int j = 0; j < e; ++j) f *= data.group_order;
        out.add_term(m, f);
      }
      return out;
    case ConversionDirection::kappa_mumford_to_ac:
      for (const auto& [m, c] : input.terms()) {
        if (m.boundary || m.kappa.empty()) {
          out.add_term(m, c);
          continue;
        }
        Monomial psi_part = m;
        psi_part.kappa.clear();
        TautClass acc = TautClass::term(ctx, psi_part, c);
        for (std::size_t a = 0; a < m.kappa.size(); ++a) {
          TautClass sub = kappa_class(ctx, static_cast<int>(a + 1));
          for (int i = 1; i <= ctx.n; ++i) sub -= TautClass::term(ctx, psi_monomial(ctx.n, i, static_cast<int>(a + 1)), 1);
          for (int j = 0; j < m.kappa[a]; ++j) acc = acc * sub;
        }
        out += acc;
      }
      return out;
  }
  throw std::invalid_argument("unknown conversion direction");
}

ConversionDirection parse_conversion_direction(const std::string& name) {
  if (name == "psi_cover_to_base") return ConversionDirection::psi_cover_to_base;
  if (name == "kappa_cover_to_base") return ConversionDirection::kappa_cover_to_base;
  if (name == "kappa_mumford_to_ac") return ConversionDirection::kappa_mumford_to_ac;
  throw std::invalid_argument("unknown conversion direction '" + name + "'");
}

std::string render_class(const TautClass& a, const FiniteGroup& G) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (!m.is_one()) os << "*" << render_monomial(m, G);
  }
  return os.str();
}

}  // namespace hhodge
