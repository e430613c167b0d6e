#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dualhelm_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace dualhelm::cli;
  CLI::App app{"dualhelm: ground states of coupled Helmholtz systems by dual minimization"};
  std::string subcommand, config_path;
  Overrides o;
  app.add_option("subcommand", subcommand, "solve | scalar | phase | verify | kernel-check (overrides the config)");
  app.add_option("-c,--config", config_path, "JSON configuration file");
  app.add_option("-o,--out", o.output_dir, "output directory");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-iters", o.max_iters, "iteration budget per restart");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }
  if (!subcommand.empty()) o.subcommand = subcommand;

  RunConfig cfg;
  try {
    cfg = config_path.empty() ? parse_config("{}") : load_config(config_path);
    apply_overrides(cfg, o);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  return run(cfg, std::cerr);
}
