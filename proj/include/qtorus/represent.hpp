#pragma once

#include <Eigen/Dense>

#include "qtorus/algebra.hpp"

namespace qtorus {

inline constexpr long kDefaultDimCap = 4096;

// The GNS matrix of x compressed to the box Z_N:
//   entry(m, n) = coeff(m-n) * exp(i * (n tilde_theta (m-n)^t)),  m, n in Z_N.
// Row/column order is FolnerBox enumeration order. Immutable after
// construction.
struct TruncatedRep {
  Theta theta;
  FolnerBox box;
  Eigen::MatrixXcd mat;

  long dim() const { return box.size(); }
};

// A_N, the twisted Toeplitz compression. Fills are OpenMP-parallel over
// columns; qtorus::ref holds the serial reference. Throws when
// (2N+1)^d exceeds dim_cap.
TruncatedRep represent(const QtElement& x, int N, long dim_cap = kDefaultDimCap);

TruncatedRep identity_rep(const Theta& theta, int N);

Complex normalized_trace(const TruncatedRep& A);

// singular values, descending
std::vector<double> singular_values(const TruncatedRep& A);

double op_norm(const TruncatedRep& A);

// ((1/dim) sum sigma_i^p)^{1/p}; p = inf delegates to op_norm.
double schatten_norm(const TruncatedRep& A, double p);

double lp_norm_estimate(const QtElement& x, double p, int N, long dim_cap = kDefaultDimCap);

// B_N, the adjoint compression: e_{mn} -> (1/|Z_N|) e^{-i n tilde (m-n)^t} U^{m-n}.
QtElement folner_compress(const TruncatedRep& A);

// smallest eigenvalue of the Hermitian symmetrization; rejects matrices that
// are not Hermitian within herm_tol.
double min_eigenvalue(const TruncatedRep& A, double herm_tol = 1e-10);

// PSD square root by eigendecomposition, negative eigenvalues clamped to 0.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& A);

// max |entry| difference
double max_entry_distance(const TruncatedRep& A, const TruncatedRep& B);

}  // namespace qtorus
