#include "hhodge_cli/json_io.hpp"

#include <stdexcept>

namespace hhodge::cli {

namespace {

Json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

std::vector<std::string> element_names(const FiniteGroup& G, const std::vector<int>& elements) {
  std::vector<std::string> out;
  for (int x : elements) out.push_back(G.name(x));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
  mpz_class den = integer_from_json(j[1]);
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(integer_from_json(j[0]), den);
  q.canonicalize();
  return q;
}

Json cyclotomic_to_json(const Cyclotomic& z) {
  Json out = Json::array();
  for (const auto& [e, c] : z.terms()) out.push_back(Json::array({rational_to_json(e), rational_to_json(c)}));
  return out;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("cyclotomic must be a list of [exponent, coefficient] pairs");
  std::vector<std::pair<Rational, Rational>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("cyclotomic term must be [exponent, coefficient]");
    terms.emplace_back(rational_from_json(t[0]), rational_from_json(t[1]));
  }
  return Cyclotomic::from_terms(terms);
}

Json character_to_json(const VirtualCharacter& w) {
  Json values = Json::array();
  for (const auto& v : w.values()) values.push_back(cyclotomic_to_json(v));
  return Json{{"group", w.group()->spec()}, {"values", values}};
}

VirtualCharacter character_from_json(const Json& j, const GroupPtr& group) {
  const std::string spec = j.at("group").get<std::string>();
  GroupPtr G = group && group->spec() == spec ? group : build_group(spec);
  std::vector<Cyclotomic> values;
  for (const auto& v : j.at("values")) values.push_back(cyclotomic_from_json(v));
  if (static_cast<int>(values.size()) != G->class_count())
    throw std::invalid_argument("character needs one value per conjugacy class");
  return VirtualCharacter(G, std::move(values));
}

Json rep_class_to_json(const RepTautClass& a, const FiniteGroup& G) {
  Json out = Json::array();
  for (const auto& [m, w] : a.terms())
    out.push_back(Json{{"monomial", render_monomial(m, G)}, {"character", character_to_json(w)}});
  return out;
}

RepTautClass rep_class_from_json(const Json& j, const TautContext& ctx, const GroupPtr& group) {
  RepTautClass out(ctx);
  for (const auto& t : j) {
    Monomial m = parse_monomial(t.at("monomial").get<std::string>(), ctx.g, ctx.n, *group);
    VirtualCharacter w = character_from_json(t.at("character"), group);
    if (!same_group(w.group(), group)) throw std::invalid_argument("character over a different group");
    out.add_term(m, w);
  }
  return out;
}

Json taut_class_to_json(const TautClass& a, const FiniteGroup& G) {
  Json out = Json::array();
  for (const auto& [m, q] : a.terms())
    out.push_back(Json{{"monomial", render_monomial(m, G)}, {"coefficient", rational_to_json(q)}});
  return out;
}

TautClass taut_class_from_json(const Json& j, const TautContext& ctx, const FiniteGroup& G) {
  TautClass out(ctx);
  for (const auto& t : j)
    out.add_term(parse_monomial(t.at("monomial").get<std::string>(), ctx.g, ctx.n, G),
                 rational_from_json(t.at("coefficient")));
  return out;
}

Json context_to_json(const ModuliContext& ctx, const Subgroup& g0) {
  return Json{{"group", ctx.group->spec()},
              {"genus", ctx.g},
              {"tails", element_names(ctx.G(), ctx.monodromy)},
              {"truncation", ctx.D},
              {"g0", element_names(ctx.G(), g0.elements())}};
}

std::pair<ModuliContext, Subgroup> context_from_json(const Json& j) {
  GroupPtr G = build_group(j.at("group").get<std::string>());
  std::vector<int> m;
  for (const auto& name : j.at("tails")) m.push_back(G->element(name.get<std::string>()));
  ModuliContext ctx = make_context(G, j.at("genus").get<int>(), m, j.at("truncation").get<int>());
  std::vector<int> h;
  for (const auto& name : j.at("g0")) h.push_back(G->element(name.get<std::string>()));
  return {ctx, Subgroup(G, h)};
}

Json bch_document(const ModuliContext& ctx, const Subgroup& g0, const RepTautClass& a) {
  Json report{{"terms", a.size()}, {"zero", a.is_zero()}};
  const Monomial unit = one_monomial(ctx.n);
  const VirtualCharacter* rank = a.find(unit);
  report["rank"] = rational_to_json(rank ? *rank->dimension().as_rational() : Rational(0));
  report["rank_rh"] = rational_to_json(rank_rh(ctx, g0));
  return Json{{"context", context_to_json(ctx, g0)}, {"class", rep_class_to_json(a, ctx.G())}, {"report", report}};
}

Json grr_document(const ModuliContext& ctx, const Subgroup& g0, const TautClass& a) {
  const Rational* rank = a.find(one_monomial(ctx.n));
  Json report{{"terms", a.size()}, {"zero", a.is_zero()}, {"rank", rational_to_json(rank ? *rank : Rational(0))}};
  return Json{{"context", context_to_json(ctx, g0)}, {"class", taut_class_to_json(a, ctx.G())}, {"report", report}};
}

BchDocument parse_bch_document(const Json& j) {
  auto [ctx, g0] = context_from_json(j.at("context"));
  RepTautClass value = rep_class_from_json(j.at("class"), ctx.taut(), ctx.group);
  return BchDocument{std::move(ctx), std::move(g0), std::move(value)};
}

}  // namespace hhodge::cli
