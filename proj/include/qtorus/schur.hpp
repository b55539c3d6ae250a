#pragma once

#include "qtorus/multiplier.hpp"
#include "qtorus/represent.hpp"

namespace qtorus {

// psi(m, n) on pairs of lattice points; total on the boxes it is used with.
struct SchurSymbol {
  int d = 1;
  std::function<Complex(const MultiIndex&, const MultiIndex&)> eval;
};

// M_psi A: entrywise product psi(m, n) * A(m, n)
TruncatedRep schur_multiply(const SchurSymbol& psi, const TruncatedRep& A);

// psi(m, n) = phi(m - n)
SchurSymbol toeplitz_lift(const MultiplierSymbol& phi);

// max entrywise defect of [T_phi x] = M_{phi~}([x]) on Z_N
double fs_identity_check(const MultiplierSymbol& phi, const QtElement& x, int N);

struct AnticommutingReport {
  double identity_defect = 0.0;  // max coeff of x*x + xx* - 2|alpha|^2 unit
  double op_norm_value = 0.0;
  double alpha_l2 = 0.0;
  bool identity_ok = false;
  bool sandwich_ok = false;  // |alpha|_2 - tol <= op_norm <= sqrt(2)|alpha|_2 + tol
};

// x = sum_k alpha_k U_k on the anticommuting slice theta_{jk} = 1/2 (j<k),
// d = len(alpha); checks x*x + xx* = 2 |alpha|^2 unit and the norm sandwich.
AnticommutingReport anticommuting_probe(const std::vector<Complex>& alpha, int N,
                                        double tol = 1e-8);

// Exploratory lower bound on the cb norm of M_{phi~} on the compressions:
// max over random matrix amplifications of level <= `level` of
// ||(id (x) M_psi)(X)|| / ||X||. A lower bound only, never an estimate of
// the cb norm itself.
double schur_cb_lower_bound(const MultiplierSymbol& phi, const Theta& theta, int N, int level,
                            int trials, uint64_t seed);

}  // namespace qtorus
