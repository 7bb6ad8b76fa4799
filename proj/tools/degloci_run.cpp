#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "degloci/error.hpp"
#include "degloci/groebner.hpp"
#include "degloci/scenario.hpp"

namespace {

int combine(int a, int b) {
  if (a == 3 || b == 3) return 3;
  if (a == 2 || b == 2) return 2;
  return std::max(a, b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Runs degeneracy-locus scenario files and prints deterministic reports."};
  std::string scenario, corpus, order, report = "json";
  std::optional<std::uint32_t> characteristic;
  std::optional<int> max_degree;
  std::optional<std::uint64_t> seed;
  int a_max = 3;
  bool dry_run = false;

  auto* src = app.add_option("--scenario", scenario, "scenario file (.scn)")->check(CLI::ExistingFile);
  app.add_option("--corpus", corpus, "directory of scenario files, run in name order")
      ->check(CLI::ExistingDirectory)
      ->excludes(src);
  app.add_option("--char", characteristic, "coefficient field: 0 for Q or a prime p");
  app.add_option("--order", order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--max-degree", max_degree, "degree guard for Groebner computations")->check(CLI::PositiveNumber);
  app.add_option("--a-max", a_max, "largest Frobenius exponent tried by p-ampleness checks")->check(CLI::Range(1, 6));
  app.add_option("--seed", seed, "overrides the scenario seed");
  app.add_option("--report", report, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--dry-run", dry_run, "parse and validate only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (scenario.empty() && corpus.empty()) {
    std::cerr << "one of --scenario or --corpus is required\n" << app.help();
    return 2;
  }

  degloci::ScenarioOptions sopts;
  sopts.characteristic = characteristic;
  sopts.seed = seed;
  if (!order.empty()) sopts.order = degloci::parse_order_kind(order);
  if (max_degree) degloci::set_default_max_degree(*max_degree);
  degloci::RunOptions ropts;
  ropts.a_max = a_max;
  ropts.dry_run = dry_run;

  std::vector<std::string> files;
  try {
    files = corpus.empty() ? std::vector<std::string>{scenario} : degloci::corpus_files(corpus);
  } catch (const degloci::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  int code = 0;
  for (const auto& path : files) {
    std::string shown = std::filesystem::path(path).filename().string();
    try {
      degloci::Scenario s = degloci::load_scenario(path, sopts);
      degloci::Report r = degloci::run_scenario(s, ropts);
      std::cout << (report == "json" ? r.jsonl() : r.text());
      code = combine(code, r.exit_code);
    } catch (const degloci::ParseError& e) {
      std::cerr << shown << ":" << e.what() << "\n";
      code = combine(code, 2);
    } catch (const degloci::ResourceError& e) {
      std::cerr << shown << ": " << e.what() << "\n";
      code = combine(code, 3);
    } catch (const degloci::Error& e) {
      std::cerr << shown << ": " << e.what() << "\n";
      code = combine(code, 2);
    }
  }
  return code;
}
