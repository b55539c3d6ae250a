#pragma once

#include <string>
#include <vector>

#include "qtorus/multiplier.hpp"

namespace qtorus {

enum class MeanMethod {
  Fejer,            // parameter N (cast to double), N increasing
  SquarePoisson,    // parameter r in [0,1), increasing to 1
  CircularPoisson,  // parameter r in [0,1), increasing to 1
  Heat,             // parameter t > 0, decreasing to 0
  BochnerRiesz,     // parameter R > 0, increasing; fixed order alpha
  PhiEps,           // parameter eps > 0, decreasing to 0; fixed Phi pair
};

MeanMethod mean_method_from_name(const std::string& name);
std::string mean_method_name(MeanMethod m);

struct MeanSpec {
  MeanMethod method = MeanMethod::Fejer;
  Complex alpha{0.0, 0.0};             // Bochner-Riesz order
  std::optional<PhiFunction> phi;      // PhiEps profile
};

MultiplierSymbol make_mean_symbol(const MeanSpec& spec, double param, int d);

struct ConvergenceRow {
  double param = 0.0;
  double error = 0.0;        // || T_phi x - x ||_p at the representation size
  double exact_error = 0.0;  // p = 2 closed form; NaN otherwise
  double defect = 0.0;       // |error - exact_error|; NaN when no closed form
};

// closed form for p=2: sqrt( sum_m |1-phi(m)|^2 |coeff(m)|^2 overlap(N,m) )
double exact_l2_mean_error(const MultiplierSymbol& phi, const QtElement& x, int N_rep);

// Errors of the summation method along the schedule. Schedule must be
// monotone in the convergence direction of the method.
std::vector<ConvergenceRow> mean_convergence_table(const QtElement& x, const MeanSpec& spec,
                                                   double p, const std::vector<double>& schedule,
                                                   int N_rep);

// max over the v-grid and over both quadrature routes (direct in t, and the
// endpoint substitution t^2 = v^2 + (1-v^2) u) of
// | (1-v^2)^{beta+delta} - C_{beta,delta} int_v^1 (1-t^2)^{beta-1} t^{2 delta+1}
//   (1 - v^2/t^2)^delta dt |.
// Requires Re(beta) > 0 and delta > -1/2.
double br_recurrence_check(Complex beta, double delta, const std::vector<double>& v_grid,
                           double quad_tol = 1e-10);

}  // namespace qtorus
