#include "qtorus/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qtorus {

namespace {

// Lanczos g=7, n=9 coefficients (Godfrey / Boost's classic set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

Complex lanczos_gamma(Complex z) {
  // expects Re z >= 0.5
  z -= 1.0;
  Complex a(kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace

Complex gamma_complex(Complex z) {
  if (z.imag() == 0.0 && z.real() == std::floor(z.real()) && z.real() <= 0.0)
    throw std::invalid_argument("gamma_complex: pole at non-positive integer");
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return M_PI / (std::sin(M_PI * z) * lanczos_gamma(1.0 - z));
  }
  return lanczos_gamma(z);
}

Complex log_gamma_complex(Complex z) { return std::log(gamma_complex(z)); }

namespace {

double bessel_j_series(double nu, double x) {
  // sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1))
  const double h = 0.5 * x;
  double term = std::pow(h, nu) / std::tgamma(nu + 1.0);
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -h * h / (k * (nu + k));
    sum += term;
    if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

double bessel_j_asymptotic(double nu, double x) {
  // Hankel expansion: J_nu(x) ~ sqrt(2/(pi x)) [P cos w - Q sin w],
  // w = x - nu pi/2 - pi/4. Terms taken until they stop decreasing.
  const double mu = 4.0 * nu * nu;
  const double w = x - 0.5 * nu * M_PI - 0.25 * M_PI;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double prev = std::numeric_limits<double>::max();
  for (int k = 1; k <= 24; ++k) {
    const double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * x * k);
    term *= f;
    const double mag = std::abs(term);
    if (mag >= prev) break;
    prev = mag;
    if (k % 4 == 1) q += term;
    else if (k % 4 == 2) p -= term;
    else if (k % 4 == 3) q -= term;
    else p += term;
    if (mag < 1e-17) break;
  }
  return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(w) - q * std::sin(w));
}

}  // namespace

double bessel_j(double nu, double x) {
  if (nu < 0.0 || x < 0.0) throw std::invalid_argument("bessel_j: requires nu >= 0, x >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x <= 12.0) return bessel_j_series(nu, x);
  return bessel_j_asymptotic(nu, x);
}

}  // namespace qtorus
