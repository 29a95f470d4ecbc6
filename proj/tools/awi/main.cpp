#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "awi/commands.hpp"

int main(int argc, char** argv) {
  using namespace awi::cli;

  CLI::App app{"Restless-bandit channel selection: approximated Whittle index "
               "simulator and validator"};
  app.require_subcommand(1);

  SimulateOptions sim_opt;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Monte Carlo policy comparison from an experiment file");
  sim->add_option("--config", sim_opt.config_path, "experiment JSON file")
      ->required();
  sim->add_option("--out", sim_opt.out_path, "results CSV path")->required();
  sim->add_option("--seed", sim_opt.seed, "master seed (mandatory for reproducibility)")
      ->required();
  int runs_override = 0;
  int horizon_override = 0;
  std::string beta_override;
  sim->add_option("--runs", runs_override, "override runs for every experiment")
      ->check(CLI::PositiveNumber);
  sim->add_option("--horizon", horizon_override,
                  "override horizon for every experiment")
      ->check(CLI::PositiveNumber);
  sim->add_option("--beta", beta_override,
                  "override discount: a number or paper-bound");
  sim->add_option("--policy", sim_opt.policies,
                  "override policies, comma-separated: myopic, random, awi:N")
      ->delimiter(',');
  sim->add_option("--threads", sim_opt.threads, "worker threads")
      ->check(CLI::Range(1, 1024));
  sim->add_option("--emit-trace", sim_opt.trace_path,
                  "write a slot-level JSON trace of run 0 per policy");

  IndexOptions idx_opt;
  CLI::App* idx = app.add_subcommand(
      "index", "tabulate the index over a belief grid for one channel");
  idx->add_option("--system", idx_opt.system, "built-in system name");
  idx->add_option("--channel", idx_opt.channel, "channel position, 1-based")
      ->check(CLI::PositiveNumber);
  double p01_flag = 0.0;
  double p11_flag = 0.0;
  CLI::Option* p01_opt =
      idx->add_option("--p01", p01_flag, "poor-to-good transition probability")
          ->check(CLI::Range(0.0, 1.0));
  CLI::Option* p11_opt =
      idx->add_option("--p11", p11_flag, "good-to-good transition probability")
          ->check(CLI::Range(0.0, 1.0));
  idx->add_option("--obs-poor", idx_opt.obs_given_poor,
                  "observation column for the poor state, comma-separated")
      ->delimiter(',');
  idx->add_option("--obs-good", idx_opt.obs_given_good,
                  "observation column for the good state, comma-separated")
      ->delimiter(',');
  idx->add_option("--throughput", idx_opt.throughput,
                  "reward for a good-state transmission")
      ->check(CLI::PositiveNumber);
  idx->add_option("--beta", idx_opt.beta,
                  "discount: a number or paper-bound")
      ->required();
  idx->add_option("--iters", idx_opt.iterations, "value expansion depth")
      ->check(CLI::Range(0, 8));
  idx->add_option("--grid", idx_opt.grid, "belief grid points")
      ->check(CLI::Range(2, 1000000));
  idx->add_option("--out", idx_opt.out_path, "CSV path (default: stdout)");

  ValidateOptions val_opt;
  CLI::App* val = app.add_subcommand(
      "validate", "run a randomized property suite against the oracle");
  val->add_option("--suite", val_opt.suite, "crossing, lemmas, oracle, or indexability")
      ->required()
      ->check(CLI::IsMember({"crossing", "lemmas", "oracle", "indexability"}));
  val->add_option("--seed", val_opt.seed, "suite seed");
  val->add_option("--budget", val_opt.budget, "trial count multiplier")
      ->check(CLI::PositiveNumber);
  val->add_option("--out", val_opt.out_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (sim->parsed()) {
    if (sim->count("--runs") > 0) sim_opt.runs = runs_override;
    if (sim->count("--horizon") > 0) sim_opt.horizon = horizon_override;
    if (sim->count("--beta") > 0) sim_opt.beta = beta_override;
    return run_simulate(sim_opt, std::cout, std::cerr);
  }
  if (idx->parsed()) {
    if (p01_opt->count() > 0) idx_opt.p01 = p01_flag;
    if (p11_opt->count() > 0) idx_opt.p11 = p11_flag;
    return run_index(idx_opt, std::cout, std::cerr);
  }
  return run_validate(val_opt, std::cout, std::cerr);
}
