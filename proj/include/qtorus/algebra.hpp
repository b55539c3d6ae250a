#pragma once

#include <complex>
#include <map>
#include <vector>

#include "qtorus/lattice.hpp"

namespace qtorus {

using Complex = std::complex<double>;

// Deformation data: a real skew-symmetric d x d matrix theta together with
// the derived strictly upper triangular matrix
//   tilde_theta_{jk} = -2*pi*theta_{jk}  (j < k),  0 otherwise.
// All cocycle phases in the algebra are driven by tilde_theta through
// bilinear_form(); adjoint and inverse phases are derived from the cocycle,
// never hard-coded.
class Theta {
 public:
  explicit Theta(int d);                                // theta = 0
  Theta(int d, const std::vector<double>& full_matrix); // row-major, validated

  static Theta zero(int d);
  static Theta anticommuting(int d);  // theta_{jk} = 1/2 for j < k
  static Theta golden(int d);         // theta_{jk} = (sqrt(5)-1)/2 for j < k
  // entries (j, k, value) with 0-based j < k; the lower triangle is implied
  static Theta from_upper(int d, const std::vector<std::tuple<int, int, double>>& upper);

  int d() const { return d_; }
  double entry(int j, int k) const { return theta_[j * d_ + k]; }
  double tilde(int j, int k) const { return tilde_[j * d_ + k]; }

  // n tilde_theta k^t = sum_{j<l} n_j tilde_theta_{jl} k_l
  double bilinear_form(const MultiIndex& n, const MultiIndex& k) const;

  // U^k U^n = cocycle(k, n) U^{k+n}
  Complex cocycle(const MultiIndex& k, const MultiIndex& n) const;

  bool operator==(const Theta& o) const { return d_ == o.d_ && theta_ == o.theta_; }
  bool is_zero() const;

 private:
  int d_;
  std::vector<double> theta_;
  std::vector<double> tilde_;
};

// A finite Fourier series sum_m coeff(m) U^m over Z^d, exact-zero pruned.
// Immutable value type; all operations are pure.
class QtElement {
 public:
  using CoeffMap = std::map<MultiIndex, Complex>;

  explicit QtElement(Theta theta) : theta_(std::move(theta)) {}

  static QtElement zero(const Theta& theta) { return QtElement(theta); }
  static QtElement unit(const Theta& theta);
  static QtElement monomial(const Theta& theta, const MultiIndex& m, Complex c = {1.0, 0.0});
  static QtElement generator(const Theta& theta, int j);  // U_j, j in 1..d

  const Theta& theta() const { return theta_; }
  int d() const { return theta_.d(); }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long support_size() const { return static_cast<long>(coeffs_.size()); }
  long degree_inf() const;  // max |m|_inf over the support, 0 if empty

  Complex coeff(const MultiIndex& m) const;
  void set_coeff(const MultiIndex& m, Complex c);
  void add_coeff(const MultiIndex& m, Complex c);

 private:
  Theta theta_;
  CoeffMap coeffs_;
};

void check_same_theta(const QtElement& x, const QtElement& y, const char* where);

QtElement operator+(const QtElement& x, const QtElement& y);
QtElement operator-(const QtElement& x, const QtElement& y);
QtElement operator*(Complex c, const QtElement& x);
QtElement mul(const QtElement& x, const QtElement& y);
QtElement adjoint(const QtElement& x);

Complex trace(const QtElement& x);                             // coeff at 0
Complex fourier_coeff(const QtElement& x, const MultiIndex& m);
double l2_norm(const QtElement& x);                            // Parseval
double max_coeff_abs(const QtElement& x);

QtElement derivation(const QtElement& x, int j);  // delta_j, j in 1..d
QtElement laplacian(const QtElement& x);          // sum_j delta_j^2

}  // namespace qtorus
