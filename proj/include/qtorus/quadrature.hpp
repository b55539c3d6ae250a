#pragma once

#include <complex>
#include <functional>

namespace qtorus {

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  long max_evaluations = 1000000;
};

// Globally adaptive Gauss(7)-Kronrod(15) with interval bisection, worst
// interval first. Handles integrable endpoint singularities by refinement.
QuadratureResult integrate_gk(const std::function<std::complex<double>(double)>& f,
                              double a, double b, const QuadratureOptions& opt = {});

QuadratureResult integrate_gk_real(const std::function<double(double)>& f,
                                   double a, double b, const QuadratureOptions& opt = {});

}  // namespace qtorus
