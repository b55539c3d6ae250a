#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qtorus/experiments.hpp"

using namespace qtorus;

namespace {

// flag values override config-file values which override defaults
struct FlagOverride {
  CLI::App* cmd;

  template <typename T>
  void apply(const char* name, T& target) const {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    if (opt && opt->count() > 0) target = opt->as<T>();
  }
};

void add_common_flags(CLI::App* cmd) {
  cmd->add_option("--config", "JSON config file; flags override its fields");
  cmd->add_option("--out", "output directory");
  cmd->add_option("--format", "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", "64-bit experiment seed");
  cmd->add_option("--threads", "OpenMP thread count (0 = library default)");
  cmd->add_option("--d", "torus dimension");
  cmd->add_option("--theta", "zero | anticommuting | golden | random");
  cmd->add_option("--element", "standard | random | explicit");
  cmd->add_option("--degree", "random element degree");
  cmd->add_option("--terms", "random element term count");
  cmd->add_option("--method", "method name where applicable");
  cmd->add_option("--p", "L_p exponent");
  cmd->add_option("--alpha", "Bochner-Riesz order (real part)");
  cmd->add_option("--alpha-imag", "Bochner-Riesz order (imaginary part)");
  cmd->add_option("--delta", "recurrence offset delta");
  cmd->add_option("--beta", "Lusin cone aperture");
  cmd->add_option("--r", "Poisson radius");
  cmd->add_option("--N", "Folner box radius");
  cmd->add_option("--N-rep", "representation box radius");
  cmd->add_option("--M", "kernel truncation box");
  cmd->add_option("--grid", "grid points");
  cmd->add_option("--trials", "number of random draws");
  cmd->add_option("--tol", "assertion tolerance override");
  cmd->add_option("--schedule", "explicit schedule values")->delimiter(',')->expected(1, -1);
}

ExperimentConfig collect(CLI::App* cmd, const std::string& subcommand) {
  ExperimentConfig c;
  const CLI::Option* cfg = cmd->get_option_no_throw("--config");
  if (cfg && cfg->count() > 0) {
    const std::string path = cfg->as<std::string>();
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    Json j;
    try {
      f >> j;
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config parse error: ") + e.what());
    }
    c = config_from_json(j);
  }
  c.subcommand = subcommand;
  FlagOverride fo{cmd};
  fo.apply("--out", c.out);
  fo.apply("--format", c.format);
  fo.apply("--seed", c.seed);
  fo.apply("--threads", c.threads);
  fo.apply("--d", c.d);
  fo.apply("--theta", c.theta);
  fo.apply("--element", c.element);
  fo.apply("--degree", c.degree);
  fo.apply("--terms", c.terms);
  fo.apply("--method", c.method);
  fo.apply("--p", c.p);
  fo.apply("--alpha", c.alpha);
  fo.apply("--alpha-imag", c.alpha_imag);
  fo.apply("--delta", c.delta);
  fo.apply("--beta", c.beta);
  fo.apply("--r", c.r);
  fo.apply("--N", c.N);
  fo.apply("--N-rep", c.N_rep);
  fo.apply("--M", c.M);
  fo.apply("--grid", c.grid);
  fo.apply("--trials", c.trials);
  fo.apply("--tol", c.tol);
  fo.apply("--schedule", c.schedule);
  validate_config(c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computable harmonic analysis on the quantum d-torus"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"converge", "mean convergence error tables for the summation methods"},
      {"kernel", "two-path kernel evaluations with tail bounds"},
      {"br-check", "Bochner-Riesz recurrence identity defect"},
      {"stein-sweep", "Bochner-Riesz convergence sweep over (p, alpha)"},
      {"schur-check", "Fourier-Schur identity on random draws"},
      {"anticommute", "anticommuting-generator identity and norm sandwich"},
      {"hardy", "Hardy norms and the duality ratio table"},
      {"bmo", "BMO norms, both variants, with PSD floors"},
      {"garsia", "two-sided Garsia equivalence on random draws"},
      {"lusin", "Lusin area integral vs g-function quadrature"},
      {"folner", "exact Folner overlap tables"},
  };
  for (const auto& [name, desc] : subs) add_common_flags(app.add_subcommand(name, desc));

  CLI11_PARSE(app, argc, argv);

  CLI::App* cmd = app.get_subcommands().front();
  try {
    const ExperimentConfig config = collect(cmd, cmd->get_name());
    const RunResult res = run_experiment(config);
    std::cout << res.summary << "\n";
    for (const auto& f : res.files) std::cout << "  wrote " << f << "\n";
    return res.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
