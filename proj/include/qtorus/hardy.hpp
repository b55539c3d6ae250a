#pragma once

#include "qtorus/represent.hpp"
#include "qtorus/transference.hpp"

namespace qtorus {

// d/dr P_r[x] = sum_{n != 0} |n|_2 r^{|n|_2 - 1} coeff(n) U^n, kept as the
// list of (frequency, coefficient, radial exponent) terms.
struct PoissonDerivative {
  struct Term {
    MultiIndex n;
    Complex coeff;
    double exponent;  // |n|_2 - 1
  };
  std::vector<Term> terms;  // no n = 0 term
};

PoissonDerivative poisson_derivative(const QtElement& x);

// G_c(x)^2 as an exact element:
//   sum_{m,n != 0} |m|_2 |n|_2 I(|m|_2+|n|_2) conj(coeff(m)) coeff(n) (U^m)* U^n,
// I(a) = int_0^1 r^{a-2} (1-r) dr = 1/(a-1) - 1/a. Selfadjoint and PSD in
// every truncated representation.
QtElement g_square(const QtElement& x);

enum class HardySide { Column, Row };

// |coeff(0)| + || sqrt(g_square) ||_p at the representation size; the row
// side applies the column construction to the adjoint.
double hardy_norm(const QtElement& x, double p, HardySide side, int N_rep);

enum class BmoVariant { Standard, Garsia };

// the inner positive element at radius r:
//   Standard: P_r[ |x - P_r x|^2 ],  Garsia: P_r[ |x|^2 ] - |P_r x|^2
QtElement bmo_inner_element(const QtElement& x, BmoVariant v, double r);

// max(|coeff(0)|, sup over the grid of op_norm(inner)^{1/2})
double bmo_norm(const QtElement& x, BmoVariant v, const std::vector<double>& r_grid, int N_rep);

// r = 1 - 2^-j for j = 0..16 together with 0, 0.1, ..., 0.9
std::vector<double> default_bmo_r_grid();

struct GarsiaReport {
  double sup_standard = 0.0;  // sup_r op_norm of the standard inner element
  double sup_garsia = 0.0;
  double ratio_low = 1.0;   // sup_standard / sup_garsia
  double ratio_high = 1.0;  // sup_garsia / sup_standard
  bool bounds_ok = false;   // std <= (1+sqrt2)^2 gar and gar <= (2+sqrt2)^2 std
};

GarsiaReport garsia_equivalence_check(const QtElement& x, const std::vector<double>& r_grid,
                                      int N_rep);

// min eigenvalue of P_{r^2}[|f|^2] + |P_{r^2} f|^2 - 2 P_r[|P_r f|^2] in the
// representation; nonnegative up to eigensolver noise.
double convexity_check(const QtElement& f, double r, int N_rep);

// ---- Lusin area integral experiment (operator-valued, classical torus) ----

struct MatrixTrigPoly {
  int d = 1;
  int q = 1;  // matrix size
  std::map<MultiIndex, Eigen::MatrixXcd> terms;
};

struct LusinParams {
  double eps0 = 1.0;     // cone truncation height
  double eps_min = 1e-3;
  int eps_layers = 24;   // geometric layers in (eps_min, eps0]
  int t_per_axis = 9;    // midpoint points per axis within a layer
  int s_grid = 16;       // per-axis grid for the outer L_p norm
};

struct LusinReport {
  double g_norm = 0.0;   // ||G~_c(f)||_p
  double s_norm = 0.0;   // ||S~_c(f)||_p
  double ratio = 0.0;    // g_norm / s_norm
};

// Quadrature comparison of the vertical and conical square functions for a
// matrix-valued trigonometric polynomial; experimental, d <= 2.
LusinReport lusin_square_experiment(const MatrixTrigPoly& f, double beta, double p,
                                    const LusinParams& params = {});

}  // namespace qtorus
