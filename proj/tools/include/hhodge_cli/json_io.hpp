#pragma once

#include "hhodge/hodge.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace hhodge::cli {

using Json = nlohmann::ordered_json;

// [num, den]; components that overflow a 64-bit integer are written as decimal strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// [[num_q, den_q], [num_c, den_c]] per term: Σ c·e(q), exponents ascending.
Json cyclotomic_to_json(const Cyclotomic& z);
Cyclotomic cyclotomic_from_json(const Json& j);

// {"group": spec, "values": [...]} with one value per conjugacy class.
Json character_to_json(const VirtualCharacter& w);
// Reuses `group` when its spec matches the document's.
VirtualCharacter character_from_json(const Json& j, const GroupPtr& group = nullptr);

Json rep_class_to_json(const RepTautClass& a, const FiniteGroup& G);
RepTautClass rep_class_from_json(const Json& j, const TautContext& ctx, const GroupPtr& group);
Json taut_class_to_json(const TautClass& a, const FiniteGroup& G);
TautClass taut_class_from_json(const Json& j, const TautContext& ctx, const FiniteGroup& G);

Json context_to_json(const ModuliContext& ctx, const Subgroup& g0);
std::pair<ModuliContext, Subgroup> context_from_json(const Json& j);

// {"context": ..., "class": [...], "report": ...}.
Json bch_document(const ModuliContext& ctx, const Subgroup& g0, const RepTautClass& a);
Json grr_document(const ModuliContext& ctx, const Subgroup& g0, const TautClass& a);
struct BchDocument {
  ModuliContext context;
  Subgroup g0;
  RepTautClass value;
};
BchDocument parse_bch_document(const Json& j);

}  // namespace hhodge::cli
