#include "qtorus/schur.hpp"

#include <cmath>
#include <stdexcept>

#include "qtorus/rng.hpp"

namespace qtorus {

TruncatedRep schur_multiply(const SchurSymbol& psi, const TruncatedRep& A) {
  if (psi.d != A.box.d()) throw std::invalid_argument("schur_multiply: dimension mismatch");
  TruncatedRep out{A.theta, A.box, Eigen::MatrixXcd(A.dim(), A.dim())};
  const long dim = A.dim();
#pragma omp parallel for schedule(static)
  for (long col = 0; col < dim; ++col) {
    const MultiIndex n = A.box.at(col);
    for (long row = 0; row < dim; ++row) {
      out.mat(row, col) = psi.eval(A.box.at(row), n) * A.mat(row, col);
    }
  }
  return out;
}

SchurSymbol toeplitz_lift(const MultiplierSymbol& phi) {
  SchurSymbol psi;
  psi.d = phi.d;
  psi.eval = [phi](const MultiIndex& m, const MultiIndex& n) {
    const MultiIndex k = sub(m, n);
    if (phi.support_radius && index_norm2(k) > *phi.support_radius) return Complex{0.0, 0.0};
    return phi.eval(k);
  };
  return psi;
}

double fs_identity_check(const MultiplierSymbol& phi, const QtElement& x, int N) {
  const TruncatedRep lhs = represent(apply_multiplier(phi, x), N);
  const TruncatedRep rhs = schur_multiply(toeplitz_lift(phi), represent(x, N));
  return max_entry_distance(lhs, rhs);
}

AnticommutingReport anticommuting_probe(const std::vector<Complex>& alpha, int N, double tol) {
  const int d = static_cast<int>(alpha.size());
  if (d < 1) throw std::invalid_argument("anticommuting_probe: empty alpha");
  const Theta theta = Theta::anticommuting(d);
  QtElement x(theta);
  double a2 = 0.0;
  for (int k = 0; k < d; ++k) {
    x.set_coeff(unit_index(d, k + 1), alpha[k]);
    a2 += std::norm(alpha[k]);
  }
  const QtElement xs = adjoint(x);
  const QtElement combo = mul(xs, x) + mul(x, xs) - Complex{2.0 * a2, 0.0} * QtElement::unit(theta);

  AnticommutingReport rep;
  rep.alpha_l2 = std::sqrt(a2);
  rep.identity_defect = max_coeff_abs(combo);
  rep.identity_ok = rep.identity_defect <= 1e-12;
  rep.op_norm_value = op_norm(represent(x, N, 100000));
  rep.sandwich_ok = rep.op_norm_value >= rep.alpha_l2 - tol &&
                    rep.op_norm_value <= std::sqrt(2.0) * rep.alpha_l2 + tol;
  return rep;
}

double schur_cb_lower_bound(const MultiplierSymbol& phi, const Theta& theta, int N, int level,
                            int trials, uint64_t seed) {
  if (level < 1 || level > 3) throw std::invalid_argument("schur_cb_lower_bound: level must be 1..3");
  const SchurSymbol psi = toeplitz_lift(phi);
  const FolnerBox box(N, theta.d());
  const long dim = box.size();
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::for_row(seed, static_cast<uint64_t>(t));
    const long big = level * dim;
    Eigen::MatrixXcd X(big, big), MX(big, big);
    // random block matrix with twisted Toeplitz blocks: X = sum e_{uv} (x) A_N(x_uv)
    for (int u = 0; u < level; ++u) {
      for (int v = 0; v < level; ++v) {
        QtElement xe(theta);
        const int terms = 1 + rng.uniform_int(1, 3);
        for (int i = 0; i < terms; ++i) {
          MultiIndex m(theta.d());
          for (auto& mi : m) mi = rng.uniform_int(-N, N);
          xe.add_coeff(m, rng.complex_in_disc());
        }
        const TruncatedRep A = represent(xe, N, 100000);
        const TruncatedRep MA = schur_multiply(psi, A);
        X.block(u * dim, v * dim, dim, dim) = A.mat;
        MX.block(u * dim, v * dim, dim, dim) = MA.mat;
      }
    }
    const double nx = X.jacobiSvd().singularValues()(0);
    const double nmx = MX.jacobiSvd().singularValues()(0);
    if (nx > 0.0) best = std::max(best, nmx / nx);
  }
  return best;
}

}  // namespace qtorus
