#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace recdiv::cli {

enum class OutputFormat { plain, json_lines };

/// One parsed command line. Only the fields of `subcommand` are meaningful.
struct CliConfig {
  std::string subcommand;

  OutputFormat format = OutputFormat::plain;
  std::optional<std::string> output;  // stdout when empty
  unsigned threads = 1;

  std::uint64_t n = 0;
  std::string limit;  // decimal; records accepts bounds beyond 64 bits
  std::string function = "kappa0";
  std::string method = "theorem2";
  bool method_given = false;
  std::uint32_t x = 0;
  bool x_given = false;
  std::vector<std::string> methods;
  std::string strategy = "signature";
  std::optional<std::string> bfile;

  std::optional<std::string> svg;
  std::optional<std::string> json;
  std::uint64_t budget = 0;
  std::optional<std::uint32_t> depth;
  std::uint32_t scale = 8;

  std::vector<std::string> compare;

  std::optional<std::uint32_t> squarefree_omega;
  bool kappa_over_2_alpha = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Parses arguments (program name excluded). Returns the config, or an exit
/// code after printing help (0) or an error with usage (2) to the streams.
std::variant<CliConfig, int> parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs a parsed command; stdout-style output goes to `out` unless
/// config.output names a file.
int execute(const CliConfig& config, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace recdiv::cli
