#include "recdiv/cli.hpp"

#include "recdiv/core.hpp"
#include "recdiv/factor.hpp"
#include "recdiv/oeis_io.hpp"
#include "recdiv/records.hpp"
#include "recdiv/sieve.hpp"
#include "recdiv/tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace recdiv::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string quoted(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

// Big integers are written as bare JSON numbers, digits exactly as computed.
class JsonLine {
 public:
  JsonLine& field(std::string_view key, const BigCount& v) { return raw(key, v.get_str()); }
  JsonLine& field(std::string_view key, std::uint64_t v) { return raw(key, std::to_string(v)); }
  JsonLine& field(std::string_view key, std::string_view v) { return raw(key, quoted(v)); }
  JsonLine& raw(std::string_view key, const std::string& json) {
    text_ += text_.empty() ? "{" : ",";
    text_ += quoted(key);
    text_ += ':';
    text_ += json;
    return *this;
  }
  std::string str() const { return text_.empty() ? "{}" : text_ + "}"; }

 private:
  std::string text_;
};

std::uint64_t parse_u64(const std::string& name, const std::string& text, std::uint64_t min = 1) {
  BigCount v;
  try {
    v = parse_big(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(name + ": '" + text + "' is not an integer");
  }
  if (v < to_big(min) || !fits_u64(v)) {
    throw UsageError(name + ": " + text + " is out of range (minimum " + std::to_string(min) + ")");
  }
  return to_u64(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) throw std::runtime_error("cannot write " + path);
}

bool json(const CliConfig& c) { return c.format == OutputFormat::json_lines; }

int cmd_eval(const CliConfig& c, std::ostream& out) {
  BigCount value;
  std::string method = c.method;
  if (c.function == "kappa_x") {
    if (!c.x_given) throw UsageError("--function kappa_x requires --x");
    if (c.method_given && c.method != "recursive") {
      throw UsageError("kappa_x is only available with --method recursive");
    }
    method = "recursive";
    value = kappa_x_recursive(c.n, c.x);
  } else {
    if (c.x_given) throw UsageError("--x only applies to --function kappa_x");
    const Method m = *parse_method(c.method);
    const Signature s = signature_of(c.n);
    value = c.function == "K" ? k_by(m, s) : kappa0_by(m, s);
  }
  if (json(c)) {
    out << JsonLine().field("n", c.n).field("value", value).field("method", method).str() << '\n';
  } else {
    out << value.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_batch(const CliConfig& c, std::ostream& out) {
  const std::uint64_t limit = parse_u64("--limit", c.limit);
  const SieveTable table = c.function == "K" ? k_sieve(limit, c.threads) : kappa0_sieve(limit, c.threads);
  Sequence seq;
  seq.terms.assign(table.values().begin(), table.values().end());
  if (c.bfile) {
    write_file(*c.bfile, write_bfile(seq));
  } else if (json(c)) {
    for (std::uint64_t n = 1; n <= limit; ++n) {
      out << JsonLine().field("n", n).field("value", table[n]).field("method", "sieve").str() << '\n';
    }
  } else {
    out << write_bfile(seq);
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
  const std::uint64_t limit = parse_u64("--limit", c.limit);
  std::vector<Method> methods;
  for (const auto& name : c.methods) {
    auto m = parse_method(name);
    if (!m) throw UsageError("--methods: unknown method '" + name + "'");
    if (std::find(methods.begin(), methods.end(), *m) == methods.end()) methods.push_back(*m);
  }
  if (methods.empty()) methods = all_methods();

  const VerifyReport report = verify_range(limit, methods, {.threads = c.threads});
  std::string method_list;
  for (Method m : report.methods) method_list += (method_list.empty() ? "" : ",") + std::string(to_string(m));
  std::string identity_list;
  for (const auto& id : report.identities) identity_list += (identity_list.empty() ? "" : ",") + id;

  if (json(c)) {
    for (const auto& m : report.mismatches) {
      out << JsonLine()
                 .field("n", m.n)
                 .field("check", m.check)
                 .field("got", m.got)
                 .field("expected", m.expected)
                 .str()
          << '\n';
    }
    out << JsonLine()
               .field("limit", limit)
               .field("methods", method_list)
               .field("identities", identity_list)
               .field("mismatches", static_cast<std::uint64_t>(report.mismatches.size()))
               .raw("ok", report.ok() ? "true" : "false")
               .str()
        << '\n';
  } else {
    out << "limit " << limit << '\n'
        << "methods " << method_list << '\n'
        << "identities " << identity_list << '\n'
        << "mismatches " << report.mismatches.size() << '\n';
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < std::min(kShown, report.mismatches.size()); ++i) {
      const auto& m = report.mismatches[i];
      out << "mismatch n=" << m.n << " check=" << m.check << " got=" << m.got.get_str()
          << " expected=" << m.expected.get_str() << '\n';
    }
    out << (report.ok() ? "ok" : "FAILED") << '\n';
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_records(const CliConfig& c, std::ostream& out) {
  const RecordFunction which = *parse_record_function(c.function);
  RecordTable table;
  if (c.strategy == "sieve") {
    table = champions_sieve(parse_u64("--limit", c.limit), which, c.threads);
  } else {
    BigCount bound;
    try {
      bound = parse_big(c.limit);
    } catch (const std::invalid_argument&) {
      throw UsageError("--limit: '" + c.limit + "' is not an integer");
    }
    if (bound < 1) throw UsageError("--limit must be at least 1");
    table = champions_signature_search(bound, which, {.threads = c.threads});
  }
  for (const auto& e : table.entries) {
    if (json(c)) {
      out << JsonLine().field("n", e.n).field("value", e.value).field("method", c.strategy).str() << '\n';
    } else {
      out << e.n.get_str() << ' ' << e.value.get_str() << '\n';
    }
  }
  return kExitOk;
}

int cmd_tree(const CliConfig& c, std::ostream& out) {
  const DivisorTree tree = build_tree(c.n, c.budget);
  const auto generations = generation_counts(tree);
  if (json(c)) {
    std::string gens = "[";
    for (std::size_t g = 0; g < generations.size(); ++g) gens += (g ? "," : "") + generations[g].get_str();
    gens += "]";
    out << JsonLine()
               .field("n", c.n)
               .field("nodes", node_count(tree))
               .field("units", unit_count(tree))
               .raw("generations", gens)
               .str()
        << '\n';
  } else {
    out << "n " << c.n << '\n' << "nodes " << node_count(tree) << '\n' << "units " << unit_count(tree) << '\n';
    out << "generations";
    for (const auto& g : generations) out << ' ' << g.get_str();
    out << '\n';
  }
  if (c.svg) write_file(*c.svg, render_svg(layout(tree), {.scale = c.scale, .max_generation = c.depth}));
  if (c.json) write_file(*c.json, export_json(tree) + "\n");
  return kExitOk;
}

int cmd_oeis(const CliConfig& c, std::ostream& out) {
  Sequence a, b;
  try {
    a = parse_bfile(read_file(c.compare[0]));
    b = parse_bfile(read_file(c.compare[1]));
  } catch (const BfileParseError& e) {
    throw UsageError(e.what());
  } catch (const BfileFormatError& e) {
    throw UsageError(e.what());
  }
  const DiffReport r = compare(a, b);
  if (json(c)) {
    JsonLine line;
    line.raw("match", r.match() ? "true" : "false");
    if (r.overlap) {
      line.raw("overlap", "[" + std::to_string(r.overlap->first) + "," + std::to_string(r.overlap->second) + "]");
    } else {
      line.raw("overlap", "null");
    }
    if (r.first_mismatch) {
      line.raw("first_mismatch", JsonLine()
                                     .raw("index", std::to_string(r.first_mismatch->index))
                                     .field("left", r.first_mismatch->left)
                                     .field("right", r.first_mismatch->right)
                                     .str());
    } else {
      line.raw("first_mismatch", "null");
    }
    line.field("mismatches", static_cast<std::uint64_t>(r.mismatch_count))
        .field("only_first", static_cast<std::uint64_t>(r.only_left))
        .field("only_second", static_cast<std::uint64_t>(r.only_right));
    out << line.str() << '\n';
  } else {
    out << to_string(r);
  }
  return r.match() ? kExitOk : kExitFailure;
}

int cmd_special(const CliConfig& c, std::ostream& out) {
  if (c.squarefree_omega.has_value() == c.kappa_over_2_alpha) {
    throw UsageError("special needs exactly one of --squarefree-omega or --kappa-over-2-alpha");
  }
  if (c.squarefree_omega) {
    if (!c.limit.empty()) throw UsageError("--limit only applies to --kappa-over-2-alpha");
    for (std::uint32_t w = 1; w <= *c.squarefree_omega; ++w) {
      const BigCount v = kappa0_squarefree(w);
      if (json(c)) {
        out << JsonLine().field("omega", std::uint64_t{w}).field("value", v).field("method", "polylog").str()
            << '\n';
      } else {
        out << v.get_str() << '\n';
      }
    }
    return kExitOk;
  }
  if (c.limit.empty()) throw UsageError("--kappa-over-2-alpha requires --limit");
  const std::uint64_t limit = parse_u64("--limit", c.limit);
  const SieveTable kappa = kappa0_sieve(limit, c.threads);
  const SpfTable spf = smallest_prime_factor_sieve(std::max<std::uint64_t>(limit, 2));
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const BigCount v = kappa[n] >> signature_of(factorize(n, spf)).alpha_star();
    if (json(c)) {
      out << JsonLine().field("n", n).field("value", v).field("method", "sieve").str() << '\n';
    } else {
      out << v.get_str() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

std::variant<CliConfig, int> parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  c.budget = kDefaultNodeBudget;
  std::string format = "plain";
  std::string output;

  CLI::App app{"Ordered factorizations and recursive divisors", "recdiv"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", format, "plain or json-lines")->check(CLI::IsMember({"plain", "json-lines"}));
  app.add_option("--output", output, "write results to this file instead of stdout");
  app.add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 4096u));

  const std::vector<std::string> methods{"recursive", "theorem1", "theorem2", "conjecture", "macmahon"};

  auto* eval = app.add_subcommand("eval", "evaluate one function value");
  eval->add_option("--n", c.n)->required()->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  auto* method_opt = eval->add_option("--method", c.method)->check(CLI::IsMember(methods));
  eval->add_option("--function", c.function)->check(CLI::IsMember({"K", "kappa0", "kappa_x"}));
  auto* x_opt = eval->add_option("--x", c.x, "parameter of kappa_x");

  auto* batch = app.add_subcommand("batch", "sieve 1..limit and print a b-file");
  batch->add_option("--limit", c.limit)->required();
  batch->add_option("--function", c.function)->check(CLI::IsMember({"K", "kappa0"}));
  batch->add_option("--bfile", c.bfile, "write the b-file here");

  auto* verify = app.add_subcommand("verify", "cross-check methods and identities on 1..limit");
  verify->add_option("--limit", c.limit)->required();
  verify->add_option("--methods", c.methods, "comma separated; default all")->delimiter(',');

  auto* records = app.add_subcommand("records", "record indices of K or kappa0");
  records->add_option("--limit", c.limit)->required();
  records->add_option("--function", c.function)->check(CLI::IsMember({"K", "kappa0"}));
  records->add_option("--strategy", c.strategy)->check(CLI::IsMember({"sieve", "signature"}));

  auto* tree = app.add_subcommand("tree", "build and render the divisor tree of n");
  tree->add_option("--n", c.n)->required()->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  tree->add_option("--svg", c.svg, "SVG output path");
  tree->add_option("--json", c.json, "JSON output path");
  tree->add_option("--budget", c.budget, "maximum node count")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  tree->add_option("--depth", c.depth, "only draw generations up to this one");
  tree->add_option("--scale", c.scale, "SVG pixels per unit")->check(CLI::Range(1u, 1024u));

  auto* oeis = app.add_subcommand("oeis", "compare two b-files");
  oeis->add_option("--compare", c.compare, "FILE_A FILE_B")->required()->expected(2);

  auto* special = app.add_subcommand("special", "sequence data for open questions");
  special->add_option("--squarefree-omega", c.squarefree_omega, "kappa0 of squarefree n for omega = 1..W");
  special->add_flag("--kappa-over-2-alpha", c.kappa_over_2_alpha, "kappa0(n) / 2^alpha* for n = 1..limit");
  special->add_option("--limit", c.limit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitUsage;
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = format == "json-lines" ? OutputFormat::json_lines : OutputFormat::plain;
  if (!output.empty()) c.output = output;
  c.method_given = method_opt->count() > 0;
  c.x_given = x_opt->count() > 0;
  return c;
}

int execute(const CliConfig& c, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (c.subcommand == "eval") code = cmd_eval(c, buffer);
    else if (c.subcommand == "batch") code = cmd_batch(c, buffer);
    else if (c.subcommand == "verify") code = cmd_verify(c, buffer);
    else if (c.subcommand == "records") code = cmd_records(c, buffer);
    else if (c.subcommand == "tree") code = cmd_tree(c, buffer);
    else if (c.subcommand == "oeis") code = cmd_oeis(c, buffer);
    else if (c.subcommand == "special") code = cmd_special(c, buffer);
    else throw UsageError("unknown subcommand '" + c.subcommand + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (c.output) {
    try {
      write_file(*c.output, buffer.str());
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitFailure;
    }
  } else {
    out << buffer.str();
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse(args, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return execute(std::get<CliConfig>(parsed), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace recdiv::cli
