#pragma once

#include "qtorus/kernels.hpp"
#include "qtorus/represent.hpp"

namespace qtorus {

// f(z) = sum_n f_n z^n with coefficients f_n in the twisted algebra; the
// polynomial part of L_inf(T^d) (x) T^d_theta.
struct OperatorTrigPoly {
  Theta theta;
  std::map<MultiIndex, QtElement> terms;

  explicit OperatorTrigPoly(Theta th) : theta(std::move(th)) {}
  void set_term(const MultiIndex& n, const QtElement& f_n);
  int d() const { return theta.d(); }
};

// pi_z(U^m) = z^m U^m
QtElement pi_z(const QtElement& x, const TorusPoint& z);

// x~ : z -> pi_z(x); term at n is coeff(n) U^n
OperatorTrigPoly twist(const QtElement& x);

QtElement evaluate(const OperatorTrigPoly& f, const TorusPoint& z);

OperatorTrigPoly operator+(const OperatorTrigPoly& f, const OperatorTrigPoly& g);
OperatorTrigPoly mul(const OperatorTrigPoly& f, const OperatorTrigPoly& g);

// E(f)(z) = pi_z( int pi_{w bar}[f(w)] dm(w) ): on polynomials the term at n
// keeps only its U^n component.
OperatorTrigPoly conditional_expectation(const OperatorTrigPoly& f);

// the defining integral evaluated by an exact trigonometric grid rule;
// cross-check of the closed form (d <= 2 scale)
OperatorTrigPoly conditional_expectation_by_quadrature(const OperatorTrigPoly& f,
                                                       int grid_per_axis);

// sqrt(sum_n ||f_n||_2^2)
double opvalued_l2_norm(const OperatorTrigPoly& f);

// max_z | ||pi_z(x)||_p - ||x||_p | over the samples, both estimated at N
double lp_isometry_probe(const QtElement& x, double p, const std::vector<TorusPoint>& z_samples,
                         int N);

}  // namespace qtorus
