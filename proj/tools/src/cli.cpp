#include "hhodge_cli/cli.hpp"

#include "hhodge/graphs.hpp"
#include "hhodge/hodge.hpp"
#include "hhodge/series.hpp"
#include "hhodge_cli/grid.hpp"
#include "hhodge_cli/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace hhodge::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Subcommand> kSubcommands = {
    {"compute-bch", Subcommand::compute_bch}, {"compute-ch", Subcommand::compute_ch}, {"verify", Subcommand::verify},
    {"graphs", Subcommand::graphs},           {"series", Subcommand::series},         {"char", Subcommand::chars}};

const std::map<std::string, OutputFormat> kFormats = {
    {"json", OutputFormat::json}, {"latex", OutputFormat::latex}, {"plain", OutputFormat::plain}};

const std::vector<std::string> kSeriesFunctions = {"frk", "frk-at-one", "f-at-one", "iif",
                                                   "root", "bernoulli", "delta-bernoulli"};

GroupPtr resolve_group(const std::string& spec, const std::string& flag) {
  try {
    return build_group(spec);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int resolve_element(const FiniteGroup& G, const std::string& name, const std::string& flag) {
  try {
    return G.element(name);
  } catch (const std::exception&) {
    throw UsageError(flag + ": unknown element '" + name + "' in " + G.spec());
  }
}

void validate(CliConfig& c) {
  switch (c.subcommand) {
    case Subcommand::compute_bch:
    case Subcommand::compute_ch:
    case Subcommand::graphs: {
      if (c.genus < 0) throw UsageError("--genus must be nonnegative");
      const int n = static_cast<int>(c.tails.size());
      if (2 * c.genus - 2 + n <= 0) throw UsageError("unstable: 2g\u22122+n \u2264 0");
      c.group = resolve_group(c.group_spec, "--group");
      c.monodromy.clear();
      for (const auto& t : c.tails) c.monodromy.push_back(resolve_element(*c.group, t, "--tails"));
      if (c.truncation && (*c.truncation < 0 || *c.truncation > dimension(c.genus, n)))
        throw UsageError("--truncation must lie in [0, 3g-3+n]");
      if (c.g0 != "full" && c.g0 != "generated") {
        std::stringstream ss(c.g0);
        for (std::string name; std::getline(ss, name, ',');) resolve_element(*c.group, name, "--g0");
      }
      break;
    }
    case Subcommand::verify:
      if (c.groups.empty()) throw UsageError("--groups needs at least one group");
      for (const auto& spec : c.groups) resolve_group(spec, "--groups");
      if (c.g0 != "full" && c.g0 != "generated") throw UsageError("--g0 for verify must be full or generated");
      if (c.max_genus < 0 || c.max_tails < 0) throw UsageError("--max-genus and --max-tails must be nonnegative");
      if (c.samples < 1) throw UsageError("--samples must be positive");
      break;
    case Subcommand::series:
      if (c.order < 0) throw UsageError("--order must be nonnegative");
      if (c.function != "bernoulli" && c.function != "delta-bernoulli" && c.r < 1) throw UsageError("--r must be positive");
      break;
    case Subcommand::chars:
      c.group = resolve_group(c.group_spec, "--group");
      if (c.element) resolve_element(*c.group, *c.element, "--element");
      break;
  }
  const bool latex_ok = c.subcommand == Subcommand::compute_bch || c.subcommand == Subcommand::compute_ch;
  if (c.format == OutputFormat::latex && !latex_ok) throw UsageError("--format latex applies to compute-bch and compute-ch");
}

// ---- contexts ----

ModuliContext build_context(const CliConfig& c) {
  return make_context(c.group, c.genus, c.monodromy, c.truncation);
}

Subgroup build_g0(const CliConfig& c, const ModuliContext& ctx) {
  if (c.g0 == "full") return default_g0(ctx);
  if (c.g0 == "generated") return principal_component_g0(ctx);
  std::vector<int> gens;
  std::stringstream ss(c.g0);
  for (std::string name; std::getline(ss, name, ',');) gens.push_back(ctx.G().element(name));
  return ctx.G().generated_subgroup(gens);
}

std::string names_list(const FiniteGroup& G, const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : ",") + G.name(x);
  return out;
}

std::string context_line(const ModuliContext& ctx, const Subgroup& g0) {
  std::ostringstream os;
  os << "group " << ctx.group->spec() << ", genus " << ctx.g << ", tails (" << names_list(ctx.G(), ctx.monodromy)
     << "), truncation " << ctx.D << ", G0 {" << names_list(ctx.G(), g0.elements()) << "}";
  return os.str();
}

// ---- LaTeX ----

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string s = sgn(q) < 0 ? "-" : "";
  return s + "\\tfrac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_cyclotomic(const Cyclotomic& z) {
  if (z.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : z.terms()) {
    std::string term = latex_rational(c);
    if (sgn(e) != 0) {
      if (term == "1") term.clear();
      if (term == "-1") term = "-";
      term += "\\zeta_{" + e.get_den().get_str() + "}^{" + e.get_num().get_str() + "}";
    }
    if (!out.empty() && term.front() != '-') out += " + ";
    else if (!out.empty()) out += " ";
    out += term;
  }
  return out;
}

std::string latex_power(const std::string& base, int e) {
  return e == 1 ? base : base + "^{" + std::to_string(e) + "}";
}

std::string latex_monomial(const Monomial& m, const FiniteGroup& G) {
  if (m.boundary) {
    const BoundarySymbol& b = *m.boundary;
    std::string graph = b.graph.kind == GraphKind::loop
                            ? "\\mathrm{loop}"
                            : "\\mathrm{tree}, g_1=" + std::to_string(b.graph.g1) + ", S_1=\\{" +
                                  [&] {
                                    std::string s;
                                    for (int t : tails_from_mask(b.graph.tails1, static_cast<int>(m.psi.size())))
                                      s += (s.empty() ? "" : ",") + std::to_string(t);
                                    return s;
                                  }() +
                                  "\\}";
    std::string arg;
    if (b.a_plus) arg += latex_power("\\psi_+", b.a_plus);
    if (b.a_minus) arg += latex_power("\\psi_-", b.a_minus);
    return "\\rho_{" + graph + ", m_+=\\mathtt{" + G.name(b.graph.m_plus) + "}*}(" + (arg.empty() ? "1" : arg) + ")";
  }
  std::string out;
  for (std::size_t i = 0; i < m.psi.size(); ++i)
    if (m.psi[i]) out += latex_power("\\psi_{" + std::to_string(i + 1) + "}", m.psi[i]);
  for (std::size_t a = 0; a < m.kappa.size(); ++a)
    if (m.kappa[a]) out += latex_power("\\kappa_{" + std::to_string(a + 1) + "}", m.kappa[a]);
  return out.empty() ? "1" : out;
}

template <class C, class F>
std::string latex_class(const GradedClass<C>& a, const FiniteGroup& G, F&& coefficient) {
  std::ostringstream os;
  os << "\\begin{align*}\n";
  if (a.is_zero()) os << "  &0\n";
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    os << (first ? "  &" : "  + &") << "\\left(" << coefficient(c) << "\\right) " << latex_monomial(m, G) << " \\\\\n";
    first = false;
  }
  os << "\\end{align*}\n";
  return os.str();
}

std::string latex_character(const VirtualCharacter& w) {
  std::string out = "\\chi = (";
  for (std::size_t i = 0; i < w.values().size(); ++i) out += (i ? ", " : "") + latex_cyclotomic(w.values()[i]);
  return out + ")";
}

// ---- subcommands ----

int compute_bch(const CliConfig& c, std::ostream& out) {
  ModuliContext ctx = build_context(c);
  Subgroup g0 = build_g0(c, ctx);
  RepTautClass value = bch_hurwitz_hodge(ctx, g0);
  switch (c.format) {
    case OutputFormat::json:
      out << bch_document(ctx, g0, value).dump(2) << "\n";
      break;
    case OutputFormat::latex:
      out << "% " << context_line(ctx, g0) << "\n% character values by conjugacy class\n"
          << latex_class(value, ctx.G(), latex_character);
      break;
    case OutputFormat::plain:
      out << context_line(ctx, g0) << "\n";
      if (value.is_zero()) out << "0\n";
      for (const auto& [m, w] : value.terms()) out << render_monomial(m, ctx.G()) << ": " << w.to_string() << "\n";
      break;
  }
  return kExitOk;
}

int compute_ch(const CliConfig& c, std::ostream& out) {
  ModuliContext ctx = build_context(c);
  Subgroup g0 = build_g0(c, ctx);
  TautClass value = ch_hurwitz_hodge_grr(ctx, g0);
  switch (c.format) {
    case OutputFormat::json:
      out << grr_document(ctx, g0, value).dump(2) << "\n";
      break;
    case OutputFormat::latex:
      out << "% " << context_line(ctx, g0) << "\n" << latex_class(value, ctx.G(), latex_rational);
      break;
    case OutputFormat::plain:
      out << context_line(ctx, g0) << "\n" << render_class(value, ctx.G()) << "\n";
      break;
  }
  return kExitOk;
}

int verify(const CliConfig& c, std::ostream& out) {
  Json cells = Json::array();
  int total = 0, failed = 0;
  std::ostringstream plain;
  for (const auto& spec : c.groups) {
    GroupPtr G = build_group(spec);
    for (auto [g, n] : stable_shapes(c.max_genus, c.max_tails))
      for (const auto& m : monodromy_vectors(*G, n, c.samples, c.seed)) {
        ModuliContext ctx = make_context(G, g, m);
        Subgroup g0 = c.g0 == "generated" ? principal_component_g0(ctx) : default_g0(ctx);
        IdentityReport report = verify_identities(ctx, g0);
        ++total;
        Json entries = Json::array();
        for (const auto& e : report.entries) {
          Json entry{{"name", e.name}, {"passed", e.passed}};
          if (!e.passed) entry["detail"] = e.detail;
          entries.push_back(entry);
        }
        const bool ok = report.all_passed();
        if (!ok) ++failed;
        cells.push_back(Json{{"context", context_to_json(ctx, g0)}, {"passed", ok}, {"entries", entries}});
        plain << (ok ? "PASS " : "FAIL ") << context_line(ctx, g0) << "\n";
        for (const auto& e : report.entries)
          if (!e.passed) plain << "  " << e.name << ": " << e.detail << "\n";
      }
  }
  if (c.format == OutputFormat::json) {
    Json summary{{"cells", total}, {"passed", total - failed}, {"failed", failed}, {"seed", c.seed}, {"samples", c.samples}};
    out << Json{{"summary", summary}, {"cells", cells}}.dump(2) << "\n";
  } else {
    out << plain.str() << (failed ? "FAIL" : "PASS") << " " << (total - failed) << "/" << total << " cells\n";
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

int graphs(const CliConfig& c, std::ostream& out) {
  ModuliContext ctx = build_context(c);
  const FiniteGroup& G = ctx.G();
  for (const auto& graph : ctx.cut_graphs) {
    if (c.format == OutputFormat::json) {
      Json rec{{"kind", graph.kind == GraphKind::loop ? "loop" : "tree"},
               {"g1", graph.g1},
               {"tails1", graph.tails1},
               {"m_plus", G.name(graph.m_plus)}};
      out << rec.dump() << "\n";
    } else {
      GraphInvariants inv = graph_invariants(graph, G);
      out << (graph.kind == GraphKind::loop ? "loop" : "tree") << " g1=" << graph.g1 << " tails1={";
      for (std::size_t i = 0; i < graph.tails1.size(); ++i) out << (i ? "," : "") << graph.tails1[i];
      out << "} m+=" << G.name(graph.m_plus) << " r+=" << inv.r_plus << " aut=" << inv.aut_order
          << (inv.decorated_aut_undefined ? " (decorated aut undefined)" : "") << "\n";
    }
  }
  return kExitOk;
}

int series(const CliConfig& c, std::ostream& out) {
  Json body{{"function", c.function}, {"r", c.r}, {"k", c.k}, {"order", c.order}};
  if (c.function == "bernoulli" || c.function == "delta-bernoulli") {
    Json values = Json::array();
    std::ostringstream plain;
    for (int j = 0; j <= c.order; ++j) {
      Rational v = c.function == "bernoulli" ? bernoulli_number(j) : delta_bernoulli(j, Rational(c.k, c.r));
      values.push_back(rational_to_json(v));
      plain << (c.function == "bernoulli" ? "B_" : "dB_") << j << " = " << v.get_str() << "\n";
    }
    body["values"] = values;
    if (c.format == OutputFormat::json)
      out << body.dump(2) << "\n";
    else
      out << plain.str();
    return kExitOk;
  }
  TruncSeries s = [&] {
    if (c.function == "frk") return frk_series(c.r, c.k, c.order);
    if (c.function == "frk-at-one") return frk_at_one_series(c.r, c.k, c.order);
    if (c.function == "f-at-one") return f_r_at_one_series(c.r, c.order);
    if (c.function == "iif") return iif_series(c.r, c.k, c.order);
    return f_r_eval_at_root(c.r, c.k, c.order);
  }();
  const bool bivariate = s.nvars() == 2;
  const std::string x = c.function == "frk" ? "t" : (bivariate ? "u+" : "u");
  if (c.format == OutputFormat::json) {
    Json terms = Json::array();
    for (const auto& [a, b, z] : s.terms()) {
      Json t{{"degree", bivariate ? Json::array({a, b}) : Json(a)}, {"coefficient", cyclotomic_to_json(z)}};
      terms.push_back(t);
    }
    body["variables"] = bivariate ? Json::array({"u+", "u-"}) : Json::array({x});
    body["terms"] = terms;
    out << body.dump(2) << "\n";
  } else {
    out << s.to_string(x, "u-") << "\n";
  }
  return kExitOk;
}

int chars(const CliConfig& c, std::ostream& out) {
  const FiniteGroup& G = *c.group;
  Json classes = Json::array();
  for (int k = 0; k < G.class_count(); ++k) {
    int rep = G.classes()[k].front();
    classes.push_back(Json{{"representative", G.name(rep)},
                           {"size", G.class_size(k)},
                           {"element_order", G.element_order(rep)},
                           {"centralizer_order", G.centralizer_order(rep)}});
  }
  Json body{{"group", G.spec()}, {"order", G.order()}, {"classes", classes},
            {"regular", character_to_json(VirtualCharacter::regular(c.group))}};
  std::optional<VirtualCharacter> induced;
  if (c.element) {
    int m = G.element(*c.element);
    induced = induce_cyclic(G, m, c.k);
    body["induced"] = Json{{"element", *c.element}, {"k", c.k}, {"character", character_to_json(*induced)}};
  }
  if (c.format == OutputFormat::json) {
    out << body.dump(2) << "\n";
    return kExitOk;
  }
  out << G.spec() << ": order " << G.order() << ", " << G.class_count() << " classes\n";
  for (const auto& cl : classes)
    out << "  " << cl["representative"].get<std::string>() << " size " << cl["size"] << " order "
        << cl["element_order"] << " centralizer " << cl["centralizer_order"] << "\n";
  out << "regular: " << VirtualCharacter::regular(c.group).to_string() << "\n";
  if (induced) out << "Ind V_" << *c.element << "^" << c.k << ": " << induced->to_string() << "\n";
  return kExitOk;
}

int dispatch(const CliConfig& c, std::ostream& out) {
  switch (c.subcommand) {
    case Subcommand::compute_bch:
      return compute_bch(c, out);
    case Subcommand::compute_ch:
      return compute_ch(c, out);
    case Subcommand::verify:
      return verify(c, out);
    case Subcommand::graphs:
      return graphs(c, out);
    case Subcommand::series:
      return series(c, out);
    case Subcommand::chars:
      return chars(c, out);
  }
  return kExitUsage;
}

void add_context_options(CLI::App* sub, CliConfig& c) {
  sub->add_option("--group", c.group_spec, "cyclic:N, dihedral:N, sym:N, product(a,b), file:<path> or a Cayley document")
      ->required();
  sub->add_option("--genus", c.genus, "genus of the base curve")->required();
  sub->add_option("--tails", c.tails, "monodromy element names, comma separated")->delimiter(',');
}

void add_format_option(CLI::App* sub, CliConfig& c) {
  sub->add_option("--format", c.format, "json, latex or plain")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  sub->add_option("--output", c.output, "write the report to this path instead of standard output");
}

}  // namespace

ParseOutcome parse_config(const std::vector<std::string>& args) {
  CliConfig c;
  CLI::App app{"Rep(G)-valued Chern characters of Hurwitz-Hodge bundles", "hhodge"};
  app.require_subcommand(1);
  std::optional<int> truncation;

  auto* bch = app.add_subcommand("compute-bch", "Rep(G)-valued Chern character of the dual Hurwitz-Hodge bundle");
  auto* ch = app.add_subcommand("compute-ch", "ordinary Chern character through Grothendieck-Riemann-Roch");
  auto* graphs_cmd = app.add_subcommand("graphs", "decorated one-edge cut graphs as JSON lines");
  for (auto* sub : {bch, ch, graphs_cmd}) {
    add_context_options(sub, c);
    add_format_option(sub, c);
  }
  for (auto* sub : {bch, ch}) {
    sub->add_option("--g0", c.g0, "full, generated, or generators of G0 (comma separated)");
    sub->add_option("--truncation", truncation, "top degree kept, default 3g-3+n (env HHODGE_TRUNC)");
  }

  auto* verify_cmd = app.add_subcommand("verify", "check the identities over a grid of contexts");
  verify_cmd->add_option("--groups", c.groups, "group specs, comma separated")->delimiter(',')->required();
  verify_cmd->add_option("--max-genus", c.max_genus, "largest base genus");
  verify_cmd->add_option("--max-tails", c.max_tails, "largest number of marked points");
  verify_cmd->add_option("--samples", c.samples, "vectors per cell when |G| > 3");
  verify_cmd->add_option("--seed", c.seed, "sampling seed");
  verify_cmd->add_option("--g0", c.g0, "full or generated");
  add_format_option(verify_cmd, c);

  auto* series_cmd = app.add_subcommand("series", "expansions of the generating functions");
  series_cmd->add_option("--function", c.function, "frk, frk-at-one, f-at-one, iif, root, bernoulli, delta-bernoulli")
      ->required()
      ->check(CLI::IsMember(kSeriesFunctions));
  series_cmd->add_option("--r", c.r, "order r");
  series_cmd->add_option("--k", c.k, "index k (the root index for root)");
  series_cmd->add_option("--order", c.order, "truncation order");
  add_format_option(series_cmd, c);

  auto* char_cmd = app.add_subcommand("char", "conjugacy classes and induced characters");
  char_cmd->add_option("--group", c.group_spec, "group spec")->required();
  char_cmd->add_option("--element", c.element, "induce V_m^k from the cyclic subgroup of this element");
  char_cmd->add_option("--k", c.k, "character index k");
  add_format_option(char_cmd, c);

  ParseOutcome outcome;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    outcome.out = out.str();
    outcome.err = err.str();
    outcome.status = code == 0 ? kExitOk : kExitUsage;
    return outcome;
  }
  for (const auto& [name, sub] : kSubcommands)
    if (app.got_subcommand(name)) c.subcommand = sub;

  if (!truncation)
    if (const char* env = std::getenv("HHODGE_TRUNC"); env && *env) {
      try {
        std::size_t used = 0;
        truncation = std::stoi(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        outcome.err = std::string("HHODGE_TRUNC: not an integer: ") + env + "\n";
        outcome.status = kExitUsage;
        return outcome;
      }
    }
  c.truncation = truncation;
  try {
    validate(c);
  } catch (const UsageError& e) {
    outcome.err = std::string("error: ") + e.what() + "\n";
    outcome.status = kExitUsage;
    return outcome;
  }
  outcome.config = std::move(c);
  return outcome;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status;
  try {
    status = dispatch(config, buffer);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  if (config.output.empty()) {
    out << buffer.str();
    return status;
  }
  std::ofstream file(config.output, std::ios::binary);
  file << buffer.str();
  if (!file) {
    err << "error: cannot write " << config.output << "\n";
    return kExitRuntime;
  }
  return status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed = parse_config(args);
  out << parsed.out;
  err << parsed.err;
  if (!parsed.config) return parsed.status;
  return run(*parsed.config, out, err);
}

}  // namespace hhodge::cli
