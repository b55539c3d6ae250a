#include "qtorus/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace qtorus {

Theta::Theta(int d) : d_(d), theta_(d * d, 0.0), tilde_(d * d, 0.0) {
  if (d < 1) throw std::invalid_argument("Theta: d must be >= 1");
}

Theta::Theta(int d, const std::vector<double>& full_matrix) : Theta(d) {
  if (static_cast<int>(full_matrix.size()) != d * d)
    throw std::invalid_argument("Theta: matrix size mismatch");
  for (int j = 0; j < d; ++j) {
    if (full_matrix[j * d + j] != 0.0)
      throw std::invalid_argument("Theta: diagonal must vanish");
    for (int k = 0; k < d; ++k) {
      if (full_matrix[j * d + k] != -full_matrix[k * d + j])
        throw std::invalid_argument("Theta: matrix must be skew-symmetric");
    }
  }
  theta_ = full_matrix;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) tilde_[j * d_ + k] = -2.0 * M_PI * theta_[j * d_ + k];
}

Theta Theta::zero(int d) { return Theta(d); }

Theta Theta::from_upper(int d, const std::vector<std::tuple<int, int, double>>& upper) {
  std::vector<double> m(d * d, 0.0);
  for (const auto& [j, k, v] : upper) {
    if (j < 0 || k < 0 || j >= d || k >= d || j >= k)
      throw std::invalid_argument("Theta::from_upper: need 0 <= j < k < d");
    m[j * d + k] = v;
    m[k * d + j] = -v;
  }
  return Theta(d, m);
}

Theta Theta::anticommuting(int d) {
  std::vector<std::tuple<int, int, double>> u;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) u.emplace_back(j, k, 0.5);
  return from_upper(d, u);
}

Theta Theta::golden(int d) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  std::vector<std::tuple<int, int, double>> u;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) u.emplace_back(j, k, g);
  return from_upper(d, u);
}

double Theta::bilinear_form(const MultiIndex& n, const MultiIndex& k) const {
  check_dim(n, d_, "Theta::bilinear_form");
  check_dim(k, d_, "Theta::bilinear_form");
  double s = 0.0;
  for (int j = 0; j < d_; ++j) {
    if (n[j] == 0) continue;
    for (int l = j + 1; l < d_; ++l) {
      if (k[l] == 0) continue;
      s += n[j] * tilde_[j * d_ + l] * k[l];
    }
  }
  return s;
}

Complex Theta::cocycle(const MultiIndex& k, const MultiIndex& n) const {
  const double phi = bilinear_form(n, k);
  if (phi == 0.0) return {1.0, 0.0};
  return std::polar(1.0, phi);
}

bool Theta::is_zero() const {
  for (double v : theta_)
    if (v != 0.0) return false;
  return true;
}

QtElement QtElement::unit(const Theta& theta) {
  return monomial(theta, zero_index(theta.d()));
}

QtElement QtElement::monomial(const Theta& theta, const MultiIndex& m, Complex c) {
  check_dim(m, theta.d(), "QtElement::monomial");
  QtElement x(theta);
  x.set_coeff(m, c);
  return x;
}

QtElement QtElement::generator(const Theta& theta, int j) {
  return monomial(theta, unit_index(theta.d(), j));
}

long QtElement::degree_inf() const {
  long deg = 0;
  for (const auto& [m, c] : coeffs_) deg = std::max(deg, index_norm_inf(m));
  return deg;
}

Complex QtElement::coeff(const MultiIndex& m) const {
  check_dim(m, d(), "QtElement::coeff");
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

void QtElement::set_coeff(const MultiIndex& m, Complex c) {
  check_dim(m, d(), "QtElement::set_coeff");
  if (c == Complex{0.0, 0.0}) coeffs_.erase(m);
  else coeffs_[m] = c;
}

void QtElement::add_coeff(const MultiIndex& m, Complex c) {
  check_dim(m, d(), "QtElement::add_coeff");
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{0.0, 0.0}) coeffs_.erase(it);
  }
}

void check_same_theta(const QtElement& x, const QtElement& y, const char* where) {
  if (!(x.theta() == y.theta()))
    throw std::invalid_argument(std::string(where) + ": Theta mismatch");
}

QtElement operator+(const QtElement& x, const QtElement& y) {
  check_same_theta(x, y, "operator+");
  QtElement r = x;
  for (const auto& [m, c] : y.coeffs()) r.add_coeff(m, c);
  return r;
}

QtElement operator-(const QtElement& x, const QtElement& y) {
  check_same_theta(x, y, "operator-");
  QtElement r = x;
  for (const auto& [m, c] : y.coeffs()) r.add_coeff(m, -c);
  return r;
}

QtElement operator*(Complex c, const QtElement& x) {
  QtElement r(x.theta());
  if (c == Complex{0.0, 0.0}) return r;
  for (const auto& [m, v] : x.coeffs()) r.set_coeff(m, c * v);
  return r;
}

QtElement mul(const QtElement& x, const QtElement& y) {
  check_same_theta(x, y, "mul");
  const Theta& th = x.theta();
  QtElement r(th);
  for (const auto& [k, xk] : x.coeffs()) {
    for (const auto& [n, yn] : y.coeffs()) {
      r.add_coeff(add(k, n), xk * yn * th.cocycle(k, n));
    }
  }
  return r;
}

QtElement adjoint(const QtElement& x) {
  const Theta& th = x.theta();
  QtElement r(th);
  for (const auto& [m, c] : x.coeffs()) {
    // (U^m)^{-1} = conj(cocycle(m, -m)) U^{-m}, since U^m U^{-m} = cocycle(m,-m).
    const MultiIndex neg = negate(m);
    r.set_coeff(neg, std::conj(c * th.cocycle(m, neg)));
  }
  return r;
}

Complex trace(const QtElement& x) { return x.coeff(zero_index(x.d())); }

Complex fourier_coeff(const QtElement& x, const MultiIndex& m) { return x.coeff(m); }

double l2_norm(const QtElement& x) {
  double s = 0.0;
  for (const auto& [m, c] : x.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

double max_coeff_abs(const QtElement& x) {
  double s = 0.0;
  for (const auto& [m, c] : x.coeffs()) s = std::max(s, std::abs(c));
  return s;
}

QtElement derivation(const QtElement& x, int j) {
  if (j < 1 || j > x.d()) throw std::invalid_argument("derivation: generator out of range");
  QtElement r(x.theta());
  for (const auto& [m, c] : x.coeffs()) {
    if (m[j - 1] == 0) continue;
    r.set_coeff(m, c * Complex{0.0, 2.0 * M_PI * m[j - 1]});
  }
  return r;
}

QtElement laplacian(const QtElement& x) {
  QtElement r(x.theta());
  for (const auto& [m, c] : x.coeffs()) {
    const double ev = -4.0 * M_PI * M_PI * static_cast<double>(index_norm2_sq(m));
    if (ev != 0.0) r.set_coeff(m, ev * c);
  }
  return r;
}

}  // namespace qtorus
