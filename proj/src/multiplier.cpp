#include "qtorus/multiplier.hpp"

#include <cmath>
#include <stdexcept>

#include "qtorus/special.hpp"

namespace qtorus {

QtElement apply_multiplier(const MultiplierSymbol& phi, const QtElement& x) {
  if (phi.d != x.d()) throw std::invalid_argument("apply_multiplier: dimension mismatch");
  QtElement r(x.theta());
  for (const auto& [m, c] : x.coeffs()) {
    if (phi.support_radius && index_norm2(m) > *phi.support_radius) continue;
    r.set_coeff(m, phi.eval(m) * c);
  }
  return r;
}

MultiplierSymbol compose(const MultiplierSymbol& phi, const MultiplierSymbol& psi) {
  if (phi.d != psi.d) throw std::invalid_argument("compose: dimension mismatch");
  MultiplierSymbol r;
  r.d = phi.d;
  std::optional<double> bound;
  if (phi.support_radius && psi.support_radius)
    bound = std::min(*phi.support_radius, *psi.support_radius);
  else if (phi.support_radius) bound = phi.support_radius;
  else if (psi.support_radius) bound = psi.support_radius;
  r.support_radius = bound;
  r.eval = [a = phi.eval, b = psi.eval](const MultiIndex& m) { return a(m) * b(m); };
  return r;
}

MultiplierSymbol constant_one_symbol(int d) {
  return {d, [](const MultiIndex&) { return Complex{1.0, 0.0}; }, std::nullopt};
}

MultiplierSymbol fejer_symbol(int N, int d) {
  if (N < 0) throw std::invalid_argument("fejer_symbol: N must be >= 0");
  MultiplierSymbol s;
  s.d = d;
  s.support_radius = static_cast<double>(N) * std::sqrt(static_cast<double>(d));
  s.eval = [N](const MultiIndex& m) {
    double v = 1.0;
    for (int mj : m) {
      const double f = 1.0 - std::abs(mj) / (N + 1.0);
      if (f <= 0.0) return Complex{0.0, 0.0};
      v *= f;
    }
    return Complex{v, 0.0};
  };
  return s;
}

MultiplierSymbol square_poisson_symbol(double r, int d) {
  if (r < 0.0 || r >= 1.0) throw std::invalid_argument("square_poisson_symbol: need 0 <= r < 1");
  MultiplierSymbol s;
  s.d = d;
  s.eval = [r](const MultiIndex& m) {
    const long n1 = index_norm1(m);
    if (n1 == 0) return Complex{1.0, 0.0};
    return Complex{std::pow(r, static_cast<double>(n1)), 0.0};
  };
  return s;
}

MultiplierSymbol circular_poisson_symbol(double r, int d) {
  if (r < 0.0 || r >= 1.0) throw std::invalid_argument("circular_poisson_symbol: need 0 <= r < 1");
  MultiplierSymbol s;
  s.d = d;
  s.eval = [r](const MultiIndex& m) {
    const double n2 = index_norm2(m);
    if (n2 == 0.0) return Complex{1.0, 0.0};
    return Complex{std::pow(r, n2), 0.0};
  };
  return s;
}

MultiplierSymbol heat_symbol(double t, int d) {
  if (t < 0.0) throw std::invalid_argument("heat_symbol: need t >= 0");
  MultiplierSymbol s;
  s.d = d;
  s.eval = [t](const MultiIndex& m) {
    return Complex{std::exp(-4.0 * M_PI * M_PI * static_cast<double>(index_norm2_sq(m)) * t), 0.0};
  };
  return s;
}

MultiplierSymbol bochner_riesz_symbol(Complex alpha, double R, int d) {
  if (R <= 0.0) throw std::invalid_argument("bochner_riesz_symbol: need R > 0");
  if (alpha != Complex{0.0, 0.0} && alpha.real() <= 0.0)
    throw std::invalid_argument("bochner_riesz_symbol: need Re(alpha) > 0");
  MultiplierSymbol s;
  s.d = d;
  s.support_radius = R;
  s.eval = [alpha, R](const MultiIndex& m) {
    const double base = 1.0 - static_cast<double>(index_norm2_sq(m)) / (R * R);
    if (alpha == Complex{0.0, 0.0}) return base >= 0.0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    if (base <= 0.0) return Complex{0.0, 0.0};
    if (alpha.imag() == 0.0) return Complex{std::pow(base, alpha.real()), 0.0};
    return std::pow(Complex{base, 0.0}, alpha);
  };
  return s;
}

double cd_poisson_constant(int d) {
  return std::tgamma(0.5 * (d + 1)) / std::pow(M_PI, 0.5 * (d + 1));
}

PhiFunction poisson_phi_pair(int d) {
  PhiFunction f;
  f.d = d;
  const double cd = cd_poisson_constant(d);
  f.Phi = [](const std::vector<double>& s) {
    double n = 0.0;
    for (double v : s) n += v * v;
    return Complex{std::exp(-2.0 * M_PI * std::sqrt(n)), 0.0};
  };
  f.phi = [cd, d](const std::vector<double>& s) {
    double n = 0.0;
    for (double v : s) n += v * v;
    return Complex{cd * std::pow(1.0 + n, -0.5 * (d + 1)), 0.0};
  };
  f.A = 2.0;  // both terms swallowed; spot-checked by phi_decay_ratio
  f.delta = 1.0;
  return f;
}

PhiFunction bochner_riesz_phi_pair(double alpha, int d) {
  if (alpha <= 0.5 * (d - 1))
    throw std::invalid_argument("bochner_riesz_phi_pair: need alpha > (d-1)/2");
  PhiFunction f;
  f.d = d;
  f.Phi = [alpha](const std::vector<double>& s) {
    double n = 0.0;
    for (double v : s) n += v * v;
    const double base = 1.0 - n;
    return base > 0.0 ? Complex{std::pow(base, alpha), 0.0} : Complex{0.0, 0.0};
  };
  const double gamma_a1 = std::tgamma(alpha + 1.0);
  f.phi = [alpha, d, gamma_a1](const std::vector<double>& s) {
    double n = 0.0;
    for (double v : s) n += v * v;
    const double r = std::sqrt(n);
    const double nu = 0.5 * d + alpha;
    if (r < 1e-8) {
      // J_nu(x) ~ (x/2)^nu / Gamma(nu+1): phi(0) = Gamma(a+1) pi^{d/2} / Gamma(d/2+a+1)
      return Complex{gamma_a1 * std::pow(M_PI, 0.5 * d) / std::tgamma(nu + 1.0), 0.0};
    }
    return Complex{gamma_a1 * bessel_j(nu, 2.0 * M_PI * r) / (std::pow(M_PI, alpha) * std::pow(r, nu)), 0.0};
  };
  // |phi(s)| ~ |s|^{-(d+1)/2 - alpha}: decay exponent d + delta with
  // delta = alpha - (d-1)/2 > 0.
  f.delta = alpha - 0.5 * (d - 1);
  // pin A from a radial probe, with headroom
  f.A = 2.0 * phi_decay_ratio(f, 400, 60.0);
  return f;
}

MultiplierSymbol phi_eps_symbol(const PhiFunction& Phi, double eps) {
  if (eps <= 0.0) throw std::invalid_argument("phi_eps_symbol: need eps > 0");
  MultiplierSymbol s;
  s.d = Phi.d;
  s.eval = [Phi, eps](const MultiIndex& m) {
    std::vector<double> arg(m.size());
    for (size_t i = 0; i < m.size(); ++i) arg[i] = eps * m[i];
    return Phi.Phi(arg);
  };
  return s;
}

double phi_decay_ratio(const PhiFunction& f, int samples, double radius) {
  double worst = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double r = radius * i / samples;
    // radial probe along a generic direction
    std::vector<double> s(f.d);
    double n = 0.0;
    for (int j = 0; j < f.d; ++j) {
      s[j] = (j + 1.0);
      n += s[j] * s[j];
    }
    const double scale = r / std::sqrt(n);
    for (double& v : s) v *= scale;
    const double val = std::abs(f.Phi(s)) + std::abs(f.phi(s));
    worst = std::max(worst, val * std::pow(1.0 + r, f.d + f.delta));
  }
  return worst;
}

}  // namespace qtorus
