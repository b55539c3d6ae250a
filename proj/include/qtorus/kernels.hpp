#pragma once

#include <functional>
#include <vector>

#include "qtorus/multiplier.hpp"

namespace qtorus {

// A point of the d-torus identified with [0,1)^d; coordinates reduced mod 1.
struct TorusPoint {
  std::vector<double> s;

  explicit TorusPoint(std::vector<double> coords);
  int d() const { return static_cast<int>(s.size()); }
};

// per-axis circular distance to 0, in [0, 1/2]
double circ_dist(double s);

double fejer_kernel_1d(int N, double s);
double fejer_kernel(int N, const TorusPoint& s);

double square_poisson_kernel(double r, const TorusPoint& s);
// separable truncated Fourier sum and the tail bound
// d * 2 r^{M+1}/(1-r) * ((1+r)/(1-r))^{d-1}
double square_poisson_series(double r, const TorusPoint& s, int M);
double square_poisson_tail_bound(double r, int d, int M);

// ---- circular Poisson kernel, two independent evaluation paths ----

struct TwoPathPoisson {
  double fourier = 0.0;         // path (a): sum_{|m|_2 <= Ma} r^{|m|_2} e^{2 pi i m.s}
  double periodized = 0.0;      // path (b): lattice sum of phi_eps + exterior
                                // integral of the missing cells
  double tol_fourier = 0.0;     // shell bound on the dropped Fourier mass
  double tol_periodized = 0.0;  // midpoint-rule bound on the cell replacement
  int M_fourier = 0;
  int M_periodized = 0;
};

// rigorous bound on sum_{|m|_2 > M} r^{|m|_2} via unit-cell covering of shells
double fourier_tail_bound(double r, int d, double M);
// smallest M with fourier_tail_bound <= tol
int auto_fourier_M(double r, int d, double tol);

// integral of the R^d Poisson kernel phi_eps over the complement of the box
// prod_j [s_j - L, s_j + L]; nested closed forms in the last coordinate,
// adaptive quadrature outside. d <= 3.
double poisson_box_complement_integral(double eps, double L, const std::vector<double>& s);

// bound on |lattice sum + complement integral - true periodization| from the
// per-cell midpoint error of the exterior cells
double periodization_midpoint_bound(double eps, int M, int d);

// fourier_tol drives the auto-chosen cut of path (a); the periodization box
// M drives path (b).
TwoPathPoisson circular_poisson_paths(double r, const TorusPoint& s, int M,
                                      double fourier_tol = 2.5e-7);

// returns the periodized path; throws if the two paths disagree beyond the
// combined tail tolerance, or if that tolerance exceeds `require_tol`.
double circular_poisson_kernel(double r, const TorusPoint& s, int M, double require_tol = 1e-3);

// ---- periodization of a general Phi pair ----

struct PeriodizeResult {
  Complex value{0.0, 0.0};
  double tail_bound = 0.0;
};

// K_eps(s) = sum_{|m|_inf <= M} phi_eps(s+m) with the decay-condition tail
// bound; throws when the bound exceeds `require_tol`.
PeriodizeResult periodize(const PhiFunction& f, double eps, const TorusPoint& s, int M,
                          double require_tol = 1e100);

// ---- scalar convolution and approximation-identity diagnostics ----

using ScalarKernel = std::function<double(const TorusPoint&)>;
using ScalarPoly = std::map<MultiIndex, Complex>;

Complex eval_trig_poly(const ScalarPoly& f, const TorusPoint& s);

// (K * f)(z) by the uniform G^d-point rule; exact when K*f is a trig
// polynomial of per-axis degree < G
Complex scalar_convolve(const ScalarKernel& kernel, const ScalarPoly& f, const TorusPoint& z,
                        int grid_per_axis);

struct ApproxIdentityReport {
  double mass = 0.0;          // integral of the kernel
  double l1_norm = 0.0;       // integral of |kernel|
  double outside_mass = 0.0;  // integral of |kernel| where max_j circ_dist > radius
};

ApproxIdentityReport approx_identity_report(const ScalarKernel& kernel, int d, double radius,
                                            int grid_per_axis);

}  // namespace qtorus
