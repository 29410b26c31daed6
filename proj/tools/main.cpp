#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

using gradreveal::cli::Options;

int main(int argc, char** argv) {
  CLI::App app{"Gradual-reveal commitment: setup, daily reveals, cracking, verification, "
               "and market simulation"};
  app.require_subcommand(1);

  Options options;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;

  app.add_option("--config", options.config, "Preset (paper|desk) or JSON run file")
      ->capture_default_str();
  auto* out_opt = app.add_option("--out", out_dir, "Output / state directory");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (overrides the run file)");
  app.add_flag("--entropy", options.entropy, "Draw from the OS random device instead of a seed");
  auto* budget_opt = app.add_option("--budget", budget, "Division tests allowed for crack")
                         ->check(CLI::PositiveNumber);
  app.add_option("--count", options.count, "Digits to reveal")->check(CLI::PositiveNumber);

  std::string bulletin;
  auto* setup = app.add_subcommand("setup", "Generate the secret and publish the bulletin");
  auto* reveal = app.add_subcommand("reveal", "Reveal the next digit(s) of p");
  auto* crack = app.add_subcommand("crack", "Search the remaining completions of p");
  auto* verify = app.add_subcommand("verify", "Audit a fully revealed bulletin");
  auto* simulate = app.add_subcommand("simulate", "Run the market simulation and write CSVs");
  crack->add_option("bulletin", bulletin, "Bulletin file (default: <out>/bulletin.json)");
  verify->add_option("bulletin", bulletin, "Bulletin file (default: <out>/bulletin.json)");

  // Global flags are accepted after the subcommand too.
  for (auto* sub : {setup, reveal, crack, verify, simulate}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (*out_opt) options.out = out_dir;
  if (*seed_opt) options.seed = seed;
  if (*budget_opt) options.budget = budget;
  if (!bulletin.empty()) options.bulletin = bulletin;

  using namespace gradreveal::cli;
  if (*setup) return cmd_setup(options, std::cout, std::cerr);
  if (*reveal) return cmd_reveal(options, std::cout, std::cerr);
  if (*crack) return cmd_crack(options, std::cout, std::cerr);
  if (*verify) return cmd_verify(options, std::cout, std::cerr);
  return cmd_simulate(options, std::cout, std::cerr);
}
