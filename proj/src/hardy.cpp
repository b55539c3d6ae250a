#include "qtorus/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtorus {

PoissonDerivative poisson_derivative(const QtElement& x) {
  PoissonDerivative d;
  for (const auto& [n, c] : x.coeffs()) {
    const double nn = index_norm2(n);
    if (nn == 0.0) continue;  // constants die under d/dr
    d.terms.push_back({n, nn * c, nn - 1.0});
  }
  return d;
}

QtElement g_square(const QtElement& x) {
  // integrate |d/dr P_r[x]|^2 (1-r) dr exactly:
  // int_0^1 r^{a-2}(1-r) dr = 1/(a-1) - 1/a with a = |m|_2 + |n|_2 > 1
  const Theta& th = x.theta();
  const PoissonDerivative deriv = poisson_derivative(x);
  QtElement acc(th);
  for (const auto& tm : deriv.terms) {
    for (const auto& tn : deriv.terms) {
      const double a = tm.exponent + tn.exponent + 2.0;
      const double weight = 1.0 / (a - 1.0) - 1.0 / a;
      const QtElement pair =
          mul(adjoint(QtElement::monomial(th, tm.n)), QtElement::monomial(th, tn.n));
      acc = acc + (weight * std::conj(tm.coeff) * tn.coeff) * pair;
    }
  }
  return acc;
}

double hardy_norm(const QtElement& x, double p, HardySide side, int N_rep) {
  const QtElement& base = x;
  const QtElement y = side == HardySide::Column ? base : adjoint(base);
  const QtElement gsq = g_square(y);
  TruncatedRep rep = represent(gsq, N_rep);
  rep.mat = psd_sqrt(rep.mat);
  return std::abs(trace(x)) + schatten_norm(rep, p);
}

namespace {

QtElement abs_square(const QtElement& y) { return mul(adjoint(y), y); }

}  // namespace

QtElement bmo_inner_element(const QtElement& x, BmoVariant v, double r) {
  const MultiplierSymbol pr = circular_poisson_symbol(r, x.d());
  if (v == BmoVariant::Standard) {
    const QtElement centered = x - apply_multiplier(pr, x);
    return apply_multiplier(pr, abs_square(centered));
  }
  return apply_multiplier(pr, abs_square(x)) - abs_square(apply_multiplier(pr, x));
}

std::vector<double> default_bmo_r_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 9; ++i) grid.push_back(0.1 * i);
  for (int j = 1; j <= 16; ++j) grid.push_back(1.0 - std::pow(2.0, -j));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

double sup_inner_norm(const QtElement& x, BmoVariant v, const std::vector<double>& r_grid,
                      int N_rep) {
  if (FolnerBox(N_rep, x.d()).size() > kDefaultDimCap)
    throw std::invalid_argument("bmo: representation exceeds the dimension cap");
  std::vector<double> vals(r_grid.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < r_grid.size(); ++i) {
    vals[i] = op_norm(represent(bmo_inner_element(x, v, r_grid[i]), N_rep));
  }
  double sup = 0.0;
  for (double t : vals) sup = std::max(sup, t);
  return sup;
}

}  // namespace

double bmo_norm(const QtElement& x, BmoVariant v, const std::vector<double>& r_grid, int N_rep) {
  for (double r : r_grid)
    if (r < 0.0 || r >= 1.0) throw std::invalid_argument("bmo_norm: r_grid not inside [0,1)");
  const double sup = sup_inner_norm(x, v, r_grid, N_rep);
  return std::max(std::abs(trace(x)), std::sqrt(sup));
}

GarsiaReport garsia_equivalence_check(const QtElement& x, const std::vector<double>& r_grid,
                                      int N_rep) {
  GarsiaReport rep;
  rep.sup_standard = sup_inner_norm(x, BmoVariant::Standard, r_grid, N_rep);
  rep.sup_garsia = sup_inner_norm(x, BmoVariant::Garsia, r_grid, N_rep);
  if (rep.sup_standard < 1e-14 && rep.sup_garsia < 1e-14) {
    rep.ratio_low = rep.ratio_high = 1.0;  // convention for constants
    rep.bounds_ok = true;
    return rep;
  }
  rep.ratio_low = rep.sup_standard / rep.sup_garsia;
  rep.ratio_high = rep.sup_garsia / rep.sup_standard;
  const double c_up = (1.0 + std::sqrt(2.0)) * (1.0 + std::sqrt(2.0));
  const double c_dn = (2.0 + std::sqrt(2.0)) * (2.0 + std::sqrt(2.0));
  rep.bounds_ok = rep.sup_standard <= c_up * rep.sup_garsia + 1e-8 &&
                  rep.sup_garsia <= c_dn * rep.sup_standard + 1e-8;
  return rep;
}

double convexity_check(const QtElement& f, double r, int N_rep) {
  if (r < 0.0 || r >= 1.0) throw std::invalid_argument("convexity_check: need 0 <= r < 1");
  const MultiplierSymbol pr = circular_poisson_symbol(r, f.d());
  const MultiplierSymbol pr2 = circular_poisson_symbol(r * r, f.d());
  const QtElement lhs = 2.0 * apply_multiplier(pr, abs_square(apply_multiplier(pr, f)));
  const QtElement rhs =
      apply_multiplier(pr2, abs_square(f)) + abs_square(apply_multiplier(pr2, f));
  return min_eigenvalue(represent(rhs - lhs, N_rep), 1e-8);
}

namespace {

// d/deps of the Poisson integral of f at (t, eps):
// sum_{n != 0} (-2 pi |n|_2) e^{-2 pi eps |n|_2} F_n e^{2 pi i n.t}
Eigen::MatrixXcd poisson_derivative(const MatrixTrigPoly& f, const std::vector<double>& t,
                                    double eps) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(f.q, f.q);
  for (const auto& [n, F] : f.terms) {
    const double nn = index_norm2(n);
    if (nn == 0.0) continue;
    double dot = 0.0;
    for (size_t i = 0; i < n.size(); ++i) dot += n[i] * t[i];
    const Complex w = -2.0 * M_PI * nn * std::exp(-2.0 * M_PI * eps * nn) *
                      std::polar(1.0, 2.0 * M_PI * dot);
    acc += w * F;
  }
  return acc;
}

double schatten_p_normalized(const Eigen::MatrixXcd& psd, double p) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(psd, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (long i = 0; i < es.eigenvalues().size(); ++i)
    s += std::pow(std::max(0.0, es.eigenvalues()(i)), 0.5 * p);  // eigenvalues of the square
  return s / static_cast<double>(psd.rows());
}

}  // namespace

LusinReport lusin_square_experiment(const MatrixTrigPoly& f, double beta, double p,
                                    const LusinParams& params) {
  if (f.d < 1 || f.d > 2) throw std::invalid_argument("lusin_square_experiment: d must be 1 or 2");
  if (beta <= 0.0) throw std::invalid_argument("lusin_square_experiment: need beta > 0");
  const int d = f.d;
  const int G = params.s_grid;
  long s_total = 1;
  for (int i = 0; i < d; ++i) s_total *= G;
  {
    double budget = static_cast<double>(s_total) * params.eps_layers;
    for (int i = 0; i < d; ++i) budget *= params.t_per_axis;
    budget *= static_cast<double>(f.terms.size());
    if (budget > 5e7) throw std::runtime_error("lusin_square_experiment: quadrature budget exceeded");
  }

  // geometric layers eps_k, with midpoint weights in eps
  std::vector<double> eps_lo(params.eps_layers), eps_hi(params.eps_layers);
  const double ratio = std::pow(params.eps_min / params.eps0, 1.0 / params.eps_layers);
  double hi = params.eps0;
  for (int k = 0; k < params.eps_layers; ++k) {
    eps_hi[k] = hi;
    eps_lo[k] = hi * ratio;
    hi = eps_lo[k];
  }

  std::vector<double> g_part(s_total, 0.0), s_part(s_total, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (long si = 0; si < s_total; ++si) {
    std::vector<double> s(d);
    long rsi = si;
    for (int j = d - 1; j >= 0; --j) {
      s[j] = static_cast<double>(rsi % G) / G;
      rsi /= G;
    }
    // vertical square function: exact in eps via the coefficient formula
    Eigen::MatrixXcd g2 = Eigen::MatrixXcd::Zero(f.q, f.q);
    for (const auto& [m, Fm] : f.terms) {
      const double nm = index_norm2(m);
      if (nm == 0.0) continue;
      for (const auto& [n, Fn] : f.terms) {
        const double nn = index_norm2(n);
        if (nn == 0.0) continue;
        double dot = 0.0;
        for (int j = 0; j < d; ++j) dot += (n[j] - m[j]) * s[j];
        const Complex w = nm * nn / ((nm + nn) * (nm + nn)) * std::polar(1.0, 2.0 * M_PI * dot);
        g2 += w * (Fm.adjoint() * Fn);
      }
    }
    g_part[si] = schatten_p_normalized(0.5 * (g2 + g2.adjoint()), p);

    // conical square function: midpoint quadrature over the truncated cone
    Eigen::MatrixXcd s2 = Eigen::MatrixXcd::Zero(f.q, f.q);
    for (int k = 0; k < params.eps_layers; ++k) {
      const double eps_mid = 0.5 * (eps_lo[k] + eps_hi[k]);
      const double d_eps = eps_hi[k] - eps_lo[k];
      const double half_width = beta * eps_mid;
      const int T = params.t_per_axis;
      const double cell = 2.0 * half_width / T;
      std::vector<double> t(d);
      if (d == 1) {
        for (int i0 = 0; i0 < T; ++i0) {
          t[0] = s[0] - half_width + (i0 + 0.5) * cell;
          const Eigen::MatrixXcd D = poisson_derivative(f, t, eps_mid);
          s2 += (cell * d_eps / std::pow(eps_mid, d - 1)) * (D.adjoint() * D);
        }
      } else {
        for (int i0 = 0; i0 < T; ++i0) {
          t[0] = s[0] - half_width + (i0 + 0.5) * cell;
          for (int i1 = 0; i1 < T; ++i1) {
            t[1] = s[1] - half_width + (i1 + 0.5) * cell;
            const double dx = t[0] - s[0], dy = t[1] - s[1];
            if (dx * dx + dy * dy > half_width * half_width) continue;  // cone cross-section
            const Eigen::MatrixXcd D = poisson_derivative(f, t, eps_mid);
            s2 += (cell * cell * d_eps / std::pow(eps_mid, d - 1)) * (D.adjoint() * D);
          }
        }
      }
    }
    s_part[si] = schatten_p_normalized(0.5 * (s2 + s2.adjoint()), p);
  }
  double g_acc = 0.0, s_acc = 0.0;
  for (long si = 0; si < s_total; ++si) {
    g_acc += g_part[si];
    s_acc += s_part[si];
  }

  LusinReport rep;
  rep.g_norm = std::pow(g_acc / static_cast<double>(s_total), 1.0 / p);
  rep.s_norm = std::pow(s_acc / static_cast<double>(s_total), 1.0 / p);
  rep.ratio = rep.s_norm > 0.0 ? rep.g_norm / rep.s_norm : 0.0;
  return rep;
}

}  // namespace qtorus
