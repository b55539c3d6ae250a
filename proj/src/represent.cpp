#include "qtorus/represent.hpp"

#include <cmath>
#include <stdexcept>

namespace qtorus {

TruncatedRep represent(const QtElement& x, int N, long dim_cap) {
  if (N < 0) throw std::invalid_argument("represent: N must be >= 0");
  FolnerBox box(N, x.d());
  if (box.size() > dim_cap)
    throw std::invalid_argument("represent: dimension " + std::to_string(box.size()) +
                                " exceeds cap " + std::to_string(dim_cap));
  TruncatedRep rep{x.theta(), box, Eigen::MatrixXcd::Zero(box.size(), box.size())};
  const long dim = box.size();
  const Theta& th = x.theta();

  // columns are independent; each thread owns a disjoint set of them
#pragma omp parallel for schedule(static)
  for (long col = 0; col < dim; ++col) {
    const MultiIndex n = box.at(col);
    for (const auto& [k, c] : x.coeffs()) {
      const MultiIndex m = add(n, k);
      if (!box.contains(m)) continue;
      const double phase = th.bilinear_form(n, k);
      rep.mat(box.index_of(m), col) = c * std::polar(1.0, phase);
    }
  }
  return rep;
}

TruncatedRep identity_rep(const Theta& theta, int N) {
  FolnerBox box(N, theta.d());
  return {theta, box, Eigen::MatrixXcd::Identity(box.size(), box.size())};
}

Complex normalized_trace(const TruncatedRep& A) {
  return A.mat.trace() / static_cast<double>(A.dim());
}

std::vector<double> singular_values(const TruncatedRep& A) {
  // Hermitian eigensolve of A^* A; sqrt of clamped eigenvalues
  Eigen::MatrixXcd gram = A.mat.adjoint() * A.mat;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("singular_values: eigensolver failed");
  const auto& ev = es.eigenvalues();
  std::vector<double> sv(ev.size());
  for (long i = 0; i < ev.size(); ++i) {
    const double lam = std::max(0.0, ev(ev.size() - 1 - i));
    sv[i] = std::sqrt(lam);
  }
  return sv;
}

double op_norm(const TruncatedRep& A) {
  auto sv = singular_values(A);
  return sv.empty() ? 0.0 : sv.front();
}

double schatten_norm(const TruncatedRep& A, double p) {
  if (std::isinf(p)) return op_norm(A);
  if (p < 1.0) throw std::invalid_argument("schatten_norm: p must be >= 1 or inf");
  const auto sv = singular_values(A);
  double s = 0.0;
  for (double v : sv) s += std::pow(v, p);
  return std::pow(s / static_cast<double>(A.dim()), 1.0 / p);
}

double lp_norm_estimate(const QtElement& x, double p, int N, long dim_cap) {
  return schatten_norm(represent(x, N, dim_cap), p);
}

QtElement folner_compress(const TruncatedRep& A) {
  const FolnerBox& box = A.box;
  const long dim = box.size();
  QtElement r(A.theta);
  for (long col = 0; col < dim; ++col) {
    const MultiIndex n = box.at(col);
    for (long row = 0; row < dim; ++row) {
      const Complex a = A.mat(row, col);
      if (a == Complex{0.0, 0.0}) continue;
      const MultiIndex k = sub(box.at(row), n);
      const double phase = A.theta.bilinear_form(n, k);
      r.add_coeff(k, a * std::polar(1.0, -phase) / static_cast<double>(dim));
    }
  }
  return r;
}

double min_eigenvalue(const TruncatedRep& A, double herm_tol) {
  const double dev = (A.mat - A.mat.adjoint()).cwiseAbs().maxCoeff();
  if (dev > herm_tol)
    throw std::invalid_argument("min_eigenvalue: matrix not Hermitian within tolerance");
  Eigen::MatrixXcd H = 0.5 * (A.mat + A.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("min_eigenvalue: eigensolver failed");
  return es.eigenvalues()(0);
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (A + A.adjoint()));
  if (es.info() != Eigen::Success) throw std::runtime_error("psd_sqrt: eigensolver failed");
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

double max_entry_distance(const TruncatedRep& A, const TruncatedRep& B) {
  if (A.dim() != B.dim()) throw std::invalid_argument("max_entry_distance: size mismatch");
  return (A.mat - B.mat).cwiseAbs().maxCoeff();
}

}  // namespace qtorus
