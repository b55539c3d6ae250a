#pragma once

#include <functional>
#include <optional>

#include "qtorus/algebra.hpp"

namespace qtorus {

// A Fourier multiplier symbol: a total function Z^d -> C. If support_radius
// is set, eval vanishes whenever |m|_2 exceeds it.
struct MultiplierSymbol {
  int d = 1;
  std::function<Complex(const MultiIndex&)> eval;
  std::optional<double> support_radius;
};

// T_phi x: coefficientwise product phi(m) * coeff(m).
QtElement apply_multiplier(const MultiplierSymbol& phi, const QtElement& x);

// pointwise product of two symbols (T_phi T_psi = T_{phi psi})
MultiplierSymbol compose(const MultiplierSymbol& phi, const MultiplierSymbol& psi);

MultiplierSymbol constant_one_symbol(int d);
MultiplierSymbol fejer_symbol(int N, int d);
MultiplierSymbol square_poisson_symbol(double r, int d);    // r^{|m|_1}
MultiplierSymbol circular_poisson_symbol(double r, int d);  // r^{|m|_2}
MultiplierSymbol heat_symbol(double t, int d);               // exp(-4 pi^2 |m|_2^2 t)
// (1 - |m|^2/R^2)^alpha for |m|_2 <= R, 0 beyond; principal branch, and
// alpha = 0 degenerates to the sharp ball cutoff.
MultiplierSymbol bochner_riesz_symbol(Complex alpha, double R, int d);

// A pair (Phi, phi = its inverse transform) with the decay data of the
// standing condition |Phi(s)| + |phi(s)| <= A (1+|s|)^{-d-delta}.
struct PhiFunction {
  int d = 1;
  std::function<Complex(const std::vector<double>&)> Phi;
  std::function<Complex(const std::vector<double>&)> phi;
  double A = 0.0;
  double delta = 0.0;
};

// Phi(s) = exp(-2 pi |s|), phi(s) = c_d (1+|s|^2)^{-(d+1)/2}
PhiFunction poisson_phi_pair(int d);
// Phi(s) = (1-|s|^2)^alpha_+, phi via the Bessel closed form; needs
// alpha > (d-1)/2 for the decay condition to hold.
PhiFunction bochner_riesz_phi_pair(double alpha, int d);

MultiplierSymbol phi_eps_symbol(const PhiFunction& Phi, double eps);

// Largest observed (|Phi|+|phi|)(1+|s|)^{d+delta} over a radial probe grid;
// spot check of the decay condition.
double phi_decay_ratio(const PhiFunction& f, int samples = 200, double radius = 50.0);

double cd_poisson_constant(int d);  // Gamma((d+1)/2) / pi^{(d+1)/2}

}  // namespace qtorus
