#pragma once

#include "hhodge/group.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hhodge::cli {

enum class Subcommand { compute_bch, compute_ch, verify, graphs, series, chars };
enum class OutputFormat { json, latex, plain };

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

struct CliConfig {
  Subcommand subcommand = Subcommand::compute_bch;
  std::string group_spec;
  GroupPtr group;
  int genus = 0;
  std::vector<std::string> tails;
  std::vector<int> monodromy;
  // "full", "generated" or a comma-separated list of generators.
  std::string g0 = "full";
  std::optional<int> truncation;
  OutputFormat format = OutputFormat::json;
  std::string output;  // empty: standard output

  // verify
  std::vector<std::string> groups;
  int max_genus = 2;
  int max_tails = 3;
  int samples = 50;
  std::uint64_t seed = 1;

  // series
  std::string function;
  int r = 2;
  int k = 1;
  int order = 4;

  // char
  std::optional<std::string> element;
};

struct ParseOutcome {
  std::optional<CliConfig> config;
  int status = kExitOk;  // meaningful when config is empty
  std::string out;       // help text
  std::string err;       // diagnostic
};

// args excludes the program name. Reads HHODGE_TRUNC when --truncation is absent.
ParseOutcome parse_config(const std::vector<std::string>& args);

// Writes the report to config.output or `out`; diagnostics go to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hhodge::cli
