#include "qtorus/transference.hpp"

#include <cmath>
#include <stdexcept>

namespace qtorus {

void OperatorTrigPoly::set_term(const MultiIndex& n, const QtElement& f_n) {
  check_dim(n, d(), "OperatorTrigPoly::set_term");
  if (!(f_n.theta() == theta))
    throw std::invalid_argument("OperatorTrigPoly::set_term: Theta mismatch");
  if (f_n.is_zero()) terms.erase(n);
  else terms.insert_or_assign(n, f_n);
}

QtElement pi_z(const QtElement& x, const TorusPoint& z) {
  if (z.d() != x.d()) throw std::invalid_argument("pi_z: dimension mismatch");
  QtElement r(x.theta());
  for (const auto& [m, c] : x.coeffs()) {
    double dot = 0.0;
    for (int i = 0; i < x.d(); ++i) dot += m[i] * z.s[i];
    r.set_coeff(m, c * std::polar(1.0, 2.0 * M_PI * dot));
  }
  return r;
}

OperatorTrigPoly twist(const QtElement& x) {
  OperatorTrigPoly f(x.theta());
  for (const auto& [m, c] : x.coeffs())
    f.set_term(m, QtElement::monomial(x.theta(), m, c));
  return f;
}

QtElement evaluate(const OperatorTrigPoly& f, const TorusPoint& z) {
  if (z.d() != f.d()) throw std::invalid_argument("evaluate: dimension mismatch");
  QtElement acc(f.theta);
  for (const auto& [n, fn] : f.terms) {
    double dot = 0.0;
    for (int i = 0; i < f.d(); ++i) dot += n[i] * z.s[i];
    acc = acc + std::polar(1.0, 2.0 * M_PI * dot) * fn;
  }
  return acc;
}

OperatorTrigPoly operator+(const OperatorTrigPoly& f, const OperatorTrigPoly& g) {
  if (!(f.theta == g.theta)) throw std::invalid_argument("operator+: Theta mismatch");
  OperatorTrigPoly r = f;
  for (const auto& [n, gn] : g.terms) {
    auto it = r.terms.find(n);
    if (it == r.terms.end()) r.set_term(n, gn);
    else r.set_term(n, it->second + gn);
  }
  return r;
}

OperatorTrigPoly mul(const OperatorTrigPoly& f, const OperatorTrigPoly& g) {
  if (!(f.theta == g.theta)) throw std::invalid_argument("mul: Theta mismatch");
  OperatorTrigPoly r(f.theta);
  for (const auto& [a, fa] : f.terms) {
    for (const auto& [b, gb] : g.terms) {
      const MultiIndex n = add(a, b);
      const QtElement prod = mul(fa, gb);
      auto it = r.terms.find(n);
      if (it == r.terms.end()) r.set_term(n, prod);
      else r.set_term(n, it->second + prod);
    }
  }
  return r;
}

OperatorTrigPoly conditional_expectation(const OperatorTrigPoly& f) {
  OperatorTrigPoly r(f.theta);
  for (const auto& [n, fn] : f.terms) {
    const Complex diag = fn.coeff(n);
    if (diag != Complex{0.0, 0.0})
      r.set_term(n, QtElement::monomial(f.theta, n, diag));
  }
  return r;
}

OperatorTrigPoly conditional_expectation_by_quadrature(const OperatorTrigPoly& f,
                                                       int grid_per_axis) {
  const int d = f.d();
  const long G = grid_per_axis;
  long total = 1;
  for (int i = 0; i < d; ++i) total *= G;

  // y = int pi_{w bar}[f(w)] dm(w) by the uniform rule, then E f = twist(y)
  QtElement y(f.theta);
  std::vector<double> w(d);
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (int j = d - 1; j >= 0; --j) {
      w[j] = static_cast<double>(r % G) / G;
      r /= G;
    }
    std::vector<double> wbar(d);
    for (int j = 0; j < d; ++j) wbar[j] = -w[j];
    y = y + pi_z(evaluate(f, TorusPoint(w)), TorusPoint(wbar));
  }
  y = Complex{1.0 / static_cast<double>(total), 0.0} * y;
  // prune quadrature residues that are exact zeros in the closed form
  QtElement cleaned(f.theta);
  for (const auto& [m, c] : y.coeffs())
    if (std::abs(c) > 1e-13) cleaned.set_coeff(m, c);
  return twist(cleaned);
}

double opvalued_l2_norm(const OperatorTrigPoly& f) {
  double s = 0.0;
  for (const auto& [n, fn] : f.terms) {
    const double v = l2_norm(fn);
    s += v * v;
  }
  return std::sqrt(s);
}

double lp_isometry_probe(const QtElement& x, double p, const std::vector<TorusPoint>& z_samples,
                         int N) {
  const double base = lp_norm_estimate(x, p, N);
  double worst = 0.0;
  for (const TorusPoint& z : z_samples) {
    const double v = lp_norm_estimate(pi_z(x, z), p, N);
    worst = std::max(worst, std::abs(v - base));
  }
  return worst;
}

}  // namespace qtorus
