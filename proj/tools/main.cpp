#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace fuzzyfp::cli;

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy metric fixed-point toolkit"};
  app.require_subcommand(1);

  struct Raw {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out = "out";
    std::string format = "both";
    bool include_diagonal = false;
    std::optional<double> t_max;
  };
  Raw raw;

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", raw.config, "configuration file (JSON)")->required();
    sub->add_option("--seed", raw.seed, "override every seed in the configuration");
    sub->add_option("--out", raw.out, "output directory")->capture_default_str();
    sub->add_option("--format", raw.format, "artifact format")
        ->check(CLI::IsMember({"json", "csv", "both"}))
        ->capture_default_str();
    sub->add_flag("--include-diagonal", raw.include_diagonal, "admit diagonal tuples in the hypothesis check");
    sub->add_option("--t-max", raw.t_max, "extend the t-grid up to this value");
    return sub;
  };
  CLI::App* axioms = add("axioms", "check t-norm and fuzzy metric axioms");
  CLI::App* hypotheses = add("hypotheses", "estimate the sampled contraction constant");
  CLI::App* solve = add("solve", "run the fixed-point iteration and verify the conclusions");
  CLI::App* suite = add("suite", "run the seeded instance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  CommandOptions options;
  options.config = raw.config;
  options.seed = raw.seed;
  options.out = raw.out;
  options.format = parse_format(raw.format);
  options.include_diagonal = raw.include_diagonal;
  options.t_max = raw.t_max;

  if (axioms->parsed()) return cmd_axioms(options, std::cout, std::cerr);
  if (hypotheses->parsed()) return cmd_hypotheses(options, std::cout, std::cerr);
  if (solve->parsed()) return cmd_solve(options, std::cout, std::cerr);
  if (suite->parsed()) return cmd_suite(options, std::cout, std::cerr);
  return kExitConfig;
}
