#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtorus/rng.hpp"
#include "qtorus/serialize.hpp"
#include "qtorus/summation.hpp"

namespace qtorus {

inline constexpr const char* kVersion = "0.1.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One config drives every subcommand; unused fields are ignored by the
// runners. CLI flags override file values which override these defaults.
struct ExperimentConfig {
  std::string subcommand;

  int d = 2;
  std::string theta = "golden";  // zero | anticommuting | golden | random
  Json theta_upper;              // explicit [[j,k,value],...] wins over preset

  std::string element = "random";  // random | standard | explicit
  int degree = 2;
  int terms = 6;
  Json element_json;

  std::string method = "fejer";
  double p = 2.0;
  double alpha = 1.0;
  double alpha_imag = 0.0;
  std::vector<double> schedule;  // empty -> per-method default
  int N_rep = 4;
  int N = 3;
  int M = 64;
  int grid = 64;
  int trials = 20;
  double r = 0.5;
  double delta = 0.25;  // Bochner-Riesz recurrence offset
  double beta = 1.0;    // Lusin cone aperture
  double tol = 0.0;     // 0 -> per-subcommand default

  uint64_t seed = 1;
  int threads = 0;
  std::string out = "qtorus-out";
  std::string format = "csv";  // csv | json
};

// Parses and validates; error messages carry the offending field path.
ExperimentConfig config_from_json(const Json& j);
// Validation of an assembled config (flag overrides included).
void validate_config(const ExperimentConfig& c);
Json config_to_json(const ExperimentConfig& c);

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 assertion failure, 2 config error
  std::vector<std::string> files;
  std::string summary;
};

RunResult run_experiment(const ExperimentConfig& config);

// ---- shared experiment ingredients ----

Theta make_theta(const ExperimentConfig& c, Rng& rng);
Theta preset_theta(const std::string& name, int d);
Theta random_theta(int d, Rng& rng);

// The fixed probe element used by the convergence criteria: coefficient 1 at
// 0 and 0.01 on {+-e_j} u {2 e_1} u {e_1 + e_2}; degree 2 in |.|_inf.
QtElement standard_test_element(const Theta& theta);

QtElement random_element(const Theta& theta, int degree, int terms, Rng& rng);
QtElement element_from_config(const ExperimentConfig& c, const Theta& theta, Rng& rng);

std::vector<double> default_schedule(MeanMethod method);

// default per-method final parameters used by the convergence acceptance
// criterion: fejer N=64, square poisson r=0.999, phi-poisson eps=1e-3,
// bochner-riesz alpha=d R=64
std::vector<std::pair<MeanSpec, std::vector<double>>> acceptance_mean_specs(int d);

double critical_index(int d, double p);  // (d-1)|1/2 - 1/p|

}  // namespace qtorus
