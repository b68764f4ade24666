#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recdiv/cli.hpp"
#include "recdiv/core.hpp"
#include "recdiv/factor.hpp"
#include "recdiv/oeis_io.hpp"
#include "recdiv/tree.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace recdiv;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("recdiv_test_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::filesystem::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("eval examples") {
  auto r = run({"eval", "--n", "36", "--function", "kappa0"});
  CHECK(r.code == 0);
  CHECK(r.out == "52\n");
  r = run({"eval", "--n", "1", "--function", "K"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"eval", "--n", "12"}).out == "16\n");  // default kappa0 by theorem2
}

TEST_CASE("eval is identical across methods") {
  for (std::uint64_t n : {1, 2, 12, 36, 360, 65536, 99991, 100000}) {
    for (const std::string function : {"K", "kappa0"}) {
      const std::string expected =
          (function == "K" ? k_recursive(n) : kappa0_recursive(n)).get_str() + "\n";
      for (const std::string method : {"recursive", "theorem1", "theorem2", "conjecture", "macmahon"}) {
        const auto r = run({"eval", "--n", std::to_string(n), "--function", function, "--method", method});
        CHECK_MESSAGE(r.out == expected, n, " ", function, " ", method);
      }
    }
  }
}

TEST_CASE("eval kappa_x and json-lines") {
  CHECK(run({"eval", "--n", "12", "--function", "kappa_x", "--x", "0"}).out == "16\n");
  CHECK(run({"eval", "--n", "12", "--function", "kappa_x", "--x", "3"}).out ==
        kappa_x_recursive(12, 3).get_str() + "\n");
  CHECK(run({"eval", "--n", "12", "--function", "kappa_x"}).code == 2);
  CHECK(run({"eval", "--n", "12", "--function", "kappa_x", "--x", "1", "--method", "theorem2"}).code == 2);
  CHECK(run({"eval", "--n", "12", "--x", "1"}).code == 2);

  const auto r = run({"--format", "json-lines", "eval", "--n", "36"});
  CHECK(r.out == "{\"n\":36,\"value\":52,\"method\":\"theorem2\"}\n");
  // global options are also accepted after the subcommand
  CHECK(run({"eval", "--n", "36", "--format", "json-lines"}).out == r.out);
  // values beyond 64 bits stay exact integers
  const auto big = run({"--format", "json-lines", "eval", "--n", "18446744073709551615", "--function", "K"});
  CHECK(big.code == 0);
  CHECK(big.out.find("\"value\":" + k_by(Method::theorem2, signature_of(18446744073709551615ull)).get_str()) !=
        std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"eval"},
           {"eval", "--n", "0"},
           {"eval", "--n", "-3"},
           {"eval", "--n", "abc"},
           {"eval", "--n", "5", "--method", "sieve"},
           {"eval", "--n", "5", "--unknown"},
           {"--threads", "0", "eval", "--n", "5"},
           {"--format", "xml", "eval", "--n", "5"},
           {"batch", "--limit", "0"},
           {"batch", "--limit", "ten"},
           {"verify", "--limit", "10", "--methods", "theorem2,nope"},
           {"records", "--limit", "100", "--strategy", "guess"},
           {"records", "--limit", "0"},
           {"special"},
           {"special", "--kappa-over-2-alpha"},
           {"special", "--squarefree-omega", "3", "--kappa-over-2-alpha", "--limit", "4"},
           {"oeis", "--compare", "only_one"},
       }) {
    const auto r = run(args);
    CHECK_MESSAGE(r.code == 2, (args.empty() ? std::string("<empty>") : args[0]));
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"eval", "--help"}).code == 0);
}

TEST_CASE("batch prints a b-file or writes one") {
  const auto r = run({"batch", "--limit", "12", "--function", "K"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1\n2 1\n3 1\n4 2\n5 1\n6 3\n7 1\n8 4\n9 2\n10 3\n11 1\n12 8\n");
  const auto path = temp_path("batch.txt");
  CHECK(run({"batch", "--limit", "12", "--bfile", path.string()}).out.empty());
  const auto seq = parse_bfile(slurp(path));
  CHECK(seq.terms.size() == 12);
  CHECK(seq.terms[11] == 16);
  CHECK(run({"--threads", "3", "batch", "--limit", "5000"}).out == run({"batch", "--limit", "5000"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--limit", "2000", "--methods", "conjecture,theorem2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "limit 2000\nmethods conjecture,theorem2\n"
        "identities kappa0=2K,2^alpha*|kappa0,kappa0=sum_{d|n}K(d),kappa0=sum_i upsilon_i\n"
        "mismatches 0\nok\n");
  r = run({"--threads", "4", "verify", "--limit", "500"});
  CHECK(r.code == 0);
  CHECK(r.out.find("methods recursive,theorem1,theorem2,conjecture,macmahon,sieve\n") != std::string::npos);
  r = run({"--format", "json-lines", "verify", "--limit", "30", "--methods", "sieve"});
  CHECK(r.out.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("records") {
  auto r = run({"records", "--limit", "12", "--function", "kappa0"});
  CHECK(r.out == "1 1\n2 2\n4 4\n6 6\n8 8\n12 16\n");
  CHECK(run({"records", "--limit", "12", "--function", "kappa0", "--strategy", "sieve"}).out == r.out);
  CHECK(run({"records", "--limit", "100000", "--function", "K", "--strategy", "sieve", "--threads", "4"}).out ==
        run({"records", "--limit", "100000", "--function", "K"}).out);
  r = run({"records", "--limit", "1000000000000000000000", "--function", "K"});
  CHECK(r.code == 0);
  CHECK(run({"records", "--limit", "1000000000000000000000", "--function", "K", "--strategy", "sieve"}).code == 2);
}

TEST_CASE("tree") {
  const auto svg = temp_path("36.svg");
  const auto json = temp_path("36.json");
  auto r = run({"tree", "--n", "36", "--svg", svg.string(), "--json", json.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "n 36\nnodes 52\nunits 26\ngenerations 1 8 19 18 6\n");
  CHECK(slurp(svg) == render_svg(layout(build_tree(36))));
  CHECK(parse_tree_json(slurp(json)) == build_tree(36));

  r = run({"--format", "json-lines", "tree", "--n", "12"});
  CHECK(r.out == "{\"n\":12,\"nodes\":16,\"units\":8,\"generations\":[1,5,7,3]}\n");

  r = run({"tree", "--n", "36", "--budget", "51"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(run({"tree", "--n", "36", "--budget", "52"}).code == 0);

  CHECK(run({"tree", "--n", "36", "--svg", svg.string(), "--depth", "1"}).code == 0);
  CHECK(slurp(svg) == render_svg(layout(build_tree(36)), {.max_generation = 1}));
  std::filesystem::remove(svg);
  std::filesystem::remove(json);
}

TEST_CASE("oeis compare") {
  const auto a = temp_path("a.txt");
  const auto b = temp_path("b.txt");
  spit(a, "# K\n1 1\n2 1\n3 1\n4 2\n");
  spit(b, "1 1\n2 1\n3 1\n4 2\n5 1\n");
  auto r = run({"oeis", "--compare", a.string(), b.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "overlap: 1..4\nfirst mismatch: none\nonly in first: 0\nonly in second: 1\nmatch\n");
  spit(b, "1 1\n2 1\n3 2\n");
  r = run({"oeis", "--compare", a.string(), b.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("first mismatch: index 3: 1 != 2") != std::string::npos);
  spit(b, "1 1\n3 1\n");
  CHECK(run({"oeis", "--compare", a.string(), b.string()}).code == 2);
  CHECK(run({"oeis", "--compare", a.string(), temp_path("missing").string()}).code == 2);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("special") {
  CHECK(run({"special", "--squarefree-omega", "5"}).out == "2\n6\n26\n150\n1082\n");
  auto r = run({"special", "--kappa-over-2-alpha", "--limit", "30"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1\n1\n1\n1\n1\n3\n1\n1\n1\n3\n1\n4\n1\n3\n3\n1\n1\n4\n1\n4\n3\n3\n1\n5\n1\n3\n1\n4\n1\n13\n");
}

TEST_CASE("--output redirects results to a file") {
  const auto path = temp_path("out.txt");
  const auto r = run({"--output", path.string(), "eval", "--n", "36"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == "52\n");
  std::filesystem::remove(path);
}
