#include "qtorus/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "qtorus/quadrature.hpp"

namespace qtorus {

namespace {

double reduce01(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;  // guard against floor rounding at the boundary
  return r;
}

// reduce to [-1/2, 1/2)
double reduce_centered(double x) {
  const double r = reduce01(x);
  return r >= 0.5 ? r - 1.0 : r;
}

double ball_volume(int d, double R) {
  if (R <= 0.0) return 0.0;
  switch (d) {
    case 1: return 2.0 * R;
    case 2: return M_PI * R * R;
    case 3: return 4.0 / 3.0 * M_PI * R * R * R;
    default: throw std::invalid_argument("ball_volume: d must be 1..3");
  }
}

long shell_count_inf(int d, long n) {  // #{ |m|_inf = n }
  const double a = 2.0 * n + 1.0, b = 2.0 * n - 1.0;
  return static_cast<long>(std::llround(std::pow(a, d) - std::pow(b, d)));
}

}  // namespace

TorusPoint::TorusPoint(std::vector<double> coords) : s(std::move(coords)) {
  if (s.empty()) throw std::invalid_argument("TorusPoint: empty coordinates");
  for (double& v : s) v = reduce01(v);
}

double circ_dist(double s) {
  const double r = reduce01(s);
  return std::min(r, 1.0 - r);
}

double fejer_kernel_1d(int N, double s) {
  if (N < 0) throw std::invalid_argument("fejer_kernel_1d: N must be >= 0");
  const double sp = std::sin(M_PI * reduce01(s));
  if (std::abs(sp) < 1e-150) return N + 1.0;
  const double num = std::sin((N + 1.0) * M_PI * reduce01(s));
  return num * num / ((N + 1.0) * sp * sp);
}

double fejer_kernel(int N, const TorusPoint& s) {
  double v = 1.0;
  for (double c : s.s) v *= fejer_kernel_1d(N, c);
  return v;
}

double square_poisson_kernel(double r, const TorusPoint& s) {
  if (r < 0.0 || r >= 1.0) throw std::invalid_argument("square_poisson_kernel: need 0 <= r < 1");
  double v = 1.0;
  for (double c : s.s) {
    v *= (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(2.0 * M_PI * c) + r * r);
  }
  return v;
}

double square_poisson_series(double r, const TorusPoint& s, int M) {
  double v = 1.0;
  for (double c : s.s) {
    double g = 1.0;
    for (int k = 1; k <= M; ++k) g += 2.0 * std::pow(r, k) * std::cos(2.0 * M_PI * k * c);
    v *= g;
  }
  return v;
}

double square_poisson_tail_bound(double r, int d, int M) {
  const double one_axis_tail = 2.0 * std::pow(r, M + 1) / (1.0 - r);
  const double full_axis = (1.0 + r) / (1.0 - r);
  return d * one_axis_tail * std::pow(full_axis, d - 1);
}

double fourier_tail_bound(double r, int d, double M) {
  if (r == 0.0) return 0.0;
  const double half_diag = 0.5 * std::sqrt(static_cast<double>(d));
  double bound = 0.0;
  double n = std::floor(M);
  for (int it = 0; it < 100000; ++it) {
    // #{ n < |m|_2 <= n+1 } <= vol(ball(n+1+hd)) - vol(ball(n-hd))
    const double count = ball_volume(d, n + 1.0 + half_diag) - ball_volume(d, n - half_diag);
    const double term = count * std::pow(r, n);
    bound += term;
    // geometric majorant once the polynomial growth is dominated
    const double q = r * std::pow((n + 2.0 + half_diag) / (n + 1.0 - half_diag), d - 1);
    if (q < 1.0 && term / (1.0 - q) < 1e-4 * bound) {
      bound += term * q / (1.0 - q);
      break;
    }
    n += 1.0;
  }
  return bound;
}

int auto_fourier_M(double r, int d, double tol) {
  int M = 8;
  while (fourier_tail_bound(r, d, M) > tol) {
    M += std::max(4, M / 4);
    if (M > 100000) throw std::runtime_error("auto_fourier_M: tolerance unreachable");
  }
  return M;
}

namespace {

// Fourier path: table-driven ball sum, OpenMP over the leading axis.
double fourier_ball_sum_omp(double r, const std::vector<double>& s, int M) {
  const int d = static_cast<int>(s.size());
  // ~vol(ball(M)) lattice points; refuse runs that would take minutes
  if (std::pow(2.0 * M + 1.0, d) > 4e9)
    throw std::runtime_error("fourier ball sum: truncation budget exceeded (r too close to 1)");
  const long M2 = static_cast<long>(M) * M;
  // r^{sqrt(k)} table over k = |m|_2^2
  std::vector<double> powr(M2 + 1);
  const double lr = std::log(r);
#pragma omp parallel for schedule(static)
  for (long k = 0; k <= M2; ++k) powr[k] = std::exp(lr * std::sqrt(static_cast<double>(k)));
  // per-axis phase tables
  std::vector<std::vector<Complex>> tab(d);
  for (int j = 0; j < d; ++j) {
    tab[j].resize(2 * M + 1);
    for (int m = -M; m <= M; ++m) tab[j][m + M] = std::polar(1.0, 2.0 * M_PI * m * s[j]);
  }

  if (d == 1) {
    double acc = 0.0;
    for (int m = -M; m <= M; ++m) acc += powr[static_cast<long>(m) * m] * tab[0][m + M].real();
    return acc;
  }

  // slice partial sums reduced in index order: deterministic for any thread count
  std::vector<double> partial(2 * M + 1, 0.0);
  if (d == 2) {
#pragma omp parallel for schedule(static)
    for (int m0 = -M; m0 <= M; ++m0) {
      const long k0 = static_cast<long>(m0) * m0;
      const int lim = static_cast<int>(std::floor(std::sqrt(static_cast<double>(M2 - k0))));
      double acc = 0.0;
      const Complex z0 = tab[0][m0 + M];
      for (int m1 = -lim; m1 <= lim; ++m1) {
        const long k = k0 + static_cast<long>(m1) * m1;
        acc += powr[k] * (z0 * tab[1][m1 + M]).real();
      }
      partial[m0 + M] = acc;
    }
  } else if (d == 3) {
#pragma omp parallel for schedule(static)
    for (int m0 = -M; m0 <= M; ++m0) {
      const long k0 = static_cast<long>(m0) * m0;
      double acc = 0.0;
      const int lim1 = static_cast<int>(std::floor(std::sqrt(static_cast<double>(M2 - k0))));
      for (int m1 = -lim1; m1 <= lim1; ++m1) {
        const long k01 = k0 + static_cast<long>(m1) * m1;
        const Complex z01 = tab[0][m0 + M] * tab[1][m1 + M];
        const int lim2 = static_cast<int>(std::floor(std::sqrt(static_cast<double>(M2 - k01))));
        for (int m2 = -lim2; m2 <= lim2; ++m2) {
          acc += powr[k01 + static_cast<long>(m2) * m2] * (z01 * tab[2][m2 + M]).real();
        }
      }
      partial[m0 + M] = acc;
    }
  } else {
    throw std::invalid_argument("fourier_ball_sum: d must be 1..3");
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

// periodization lattice sum over |m|_inf <= M, kernel centered at s in
// [-1/2, 1/2)^d; OpenMP over the leading axis
double poisson_lattice_sum_omp(double eps, const std::vector<double>& s, int M) {
  const int d = static_cast<int>(s.size());
  const double cd = cd_poisson_constant(d);
  const double e2 = eps * eps;
  std::vector<double> partial(2 * M + 1, 0.0);
  if (d == 1) {
#pragma omp parallel for schedule(static)
    for (int m0 = -M; m0 <= M; ++m0) {
      const double t0 = s[0] + m0;
      partial[m0 + M] = cd * eps / (e2 + t0 * t0);
    }
  } else if (d == 2) {
#pragma omp parallel for schedule(static)
    for (int m0 = -M; m0 <= M; ++m0) {
      const double t0 = s[0] + m0;
      const double q0 = e2 + t0 * t0;
      double acc = 0.0;
      for (int m1 = -M; m1 <= M; ++m1) {
        const double t1 = s[1] + m1;
        const double q = q0 + t1 * t1;
        acc += cd * eps / (q * std::sqrt(q));
      }
      partial[m0 + M] = acc;
    }
  } else if (d == 3) {
#pragma omp parallel for schedule(static)
    for (int m0 = -M; m0 <= M; ++m0) {
      const double t0 = s[0] + m0;
      const double q0 = e2 + t0 * t0;
      double acc = 0.0;
      for (int m1 = -M; m1 <= M; ++m1) {
        const double t1 = s[1] + m1;
        const double q01 = q0 + t1 * t1;
        for (int m2 = -M; m2 <= M; ++m2) {
          const double t2 = s[2] + m2;
          const double q = q01 + t2 * t2;
          acc += cd * eps / (q * q);
        }
      }
      partial[m0 + M] = acc;
    }
  } else {
    throw std::invalid_argument("poisson_lattice_sum: d must be 1..3");
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

// 1D exterior integrals of the j-dimensional kernel slice in its last
// coordinate, closed forms; b^2 = eps^2 + (fixed coordinates)^2
double exterior_1d(double eps, int j, double b2, double lo, double hi) {
  switch (j) {
    case 1: {
      return (1.0 / M_PI) * (M_PI - std::atan(hi / eps) + std::atan(lo / eps));
    }
    case 2: {
      const double c2 = cd_poisson_constant(2);
      const double full = 2.0 / b2;
      const double upper = hi / (b2 * std::sqrt(b2 + hi * hi));
      const double lower = lo / (b2 * std::sqrt(b2 + lo * lo));
      return c2 * eps * (full - upper + lower);
    }
    case 3: {
      const double c3 = cd_poisson_constant(3);
      const double b = std::sqrt(b2);
      auto F = [&](double w) {
        return w / (2.0 * b2 * (b2 + w * w)) + std::atan(w / b) / (2.0 * b2 * b);
      };
      const double full = M_PI / (2.0 * b2 * b);
      return c3 * eps * (full - F(hi) + F(lo));
    }
    default:
      throw std::invalid_argument("exterior_1d: j must be 1..3");
  }
}

}  // namespace

double poisson_box_complement_integral(double eps, double L, const std::vector<double>& s) {
  const int d = static_cast<int>(s.size());
  if (d < 1 || d > 3) throw std::invalid_argument("poisson_box_complement_integral: d must be 1..3");
  // decomposition of the complement: {v1 outside} u {v1 in, v2 outside} u ...
  double total = exterior_1d(eps, 1, eps * eps, s[0] - L, s[0] + L);
  if (d >= 2) {
    QuadratureOptions opt;
    opt.abs_tol = 1e-12;
    auto inner2 = [&](double v1) {
      return exterior_1d(eps, 2, eps * eps + v1 * v1, s[1] - L, s[1] + L);
    };
    total += integrate_gk_real(inner2, s[0] - L, s[0] + L, opt).value.real();
    if (d == 3) {
      auto inner3 = [&](double v1) {
        auto f = [&](double v2) {
          return exterior_1d(eps, 3, eps * eps + v1 * v1 + v2 * v2, s[2] - L, s[2] + L);
        };
        QuadratureOptions inner_opt;
        inner_opt.abs_tol = 1e-13;
        return integrate_gk_real(f, s[1] - L, s[1] + L, inner_opt).value.real();
      };
      total += integrate_gk_real(inner3, s[0] - L, s[0] + L, opt).value.real();
    }
  }
  return total;
}

double periodization_midpoint_bound(double eps, int M, int d) {
  // per exterior cell, midpoint error <= (1/24) sum_i sup |dd_i phi|,
  // and |dd_i phi| <= c_d eps (d+1)(d+4) (eps^2 + |u|^2)^{-(d+3)/2}
  const double cd = cd_poisson_constant(d);
  const double lead = d * (d + 1.0) * (d + 4.0) / 24.0 * cd * eps;
  double s = 0.0;
  const double expo = -0.5 * (d + 3);
  for (long n = M + 1;; ++n) {
    const double dist = static_cast<double>(n) - 1.0;
    const double term =
        static_cast<double>(shell_count_inf(d, n)) * std::pow(eps * eps + dist * dist, expo);
    s += term;
    if (term < 1e-6 * s || n > 200L * M) {
      s += term * n;  // crude majorant of the remaining power tail
      break;
    }
  }
  return lead * s;
}

TwoPathPoisson circular_poisson_paths(double r, const TorusPoint& s, int M, double fourier_tol) {
  if (r <= 0.0 || r >= 1.0)
    throw std::invalid_argument("circular_poisson_paths: need 0 < r < 1");
  if (M < 2) throw std::invalid_argument("circular_poisson_paths: M too small");
  const int d = s.d();
  const double eps = -std::log(r) / (2.0 * M_PI);

  TwoPathPoisson out;
  out.M_periodized = M;
  out.M_fourier = auto_fourier_M(r, d, fourier_tol);
  out.tol_fourier = fourier_tail_bound(r, d, out.M_fourier);
  out.fourier = fourier_ball_sum_omp(r, s.s, out.M_fourier);

  std::vector<double> sc(s.s.size());
  for (size_t i = 0; i < sc.size(); ++i) sc[i] = reduce_centered(s.s[i]);
  const double latt = poisson_lattice_sum_omp(eps, sc, M);
  const double comp = poisson_box_complement_integral(eps, M + 0.5, sc);
  out.periodized = latt + comp;
  out.tol_periodized = periodization_midpoint_bound(eps, M, d) + 1e-9;
  return out;
}

double circular_poisson_kernel(double r, const TorusPoint& s, int M, double require_tol) {
  const TwoPathPoisson p = circular_poisson_paths(r, s, M);
  const double combined = p.tol_fourier + p.tol_periodized;
  if (combined > require_tol)
    throw std::runtime_error("circular_poisson_kernel: tails exceed tolerance at given M");
  if (std::abs(p.fourier - p.periodized) > combined + 1e-12)
    throw std::runtime_error("circular_poisson_kernel: two-path disagreement beyond tolerance");
  return p.periodized;
}

PeriodizeResult periodize(const PhiFunction& f, double eps, const TorusPoint& s, int M,
                          double require_tol) {
  if (eps <= 0.0) throw std::invalid_argument("periodize: need eps > 0");
  const int d = f.d;
  if (d != s.d()) throw std::invalid_argument("periodize: dimension mismatch");
  std::vector<double> sc(s.s.size());
  for (size_t i = 0; i < sc.size(); ++i) sc[i] = reduce_centered(s.s[i]);

  const double inv_eps_d = std::pow(eps, -d);
  Complex acc{0.0, 0.0};
  std::vector<int> m(d, -M);
  std::vector<double> arg(d);
  for (;;) {
    for (int i = 0; i < d; ++i) arg[i] = (sc[i] + m[i]) / eps;
    acc += inv_eps_d * f.phi(arg);
    int i = d - 1;
    while (i >= 0 && m[i] == M) m[i--] = -M;
    if (i < 0) break;
    ++m[i];
  }

  // tail from the decay condition: |phi_eps(u)| <= A eps^delta / |u|^{d+delta}
  double tail = 0.0;
  for (long n = M + 1;; ++n) {
    const double term = static_cast<double>(shell_count_inf(d, n)) * f.A *
                        std::pow(eps, f.delta) * std::pow(n - 0.5, -(d + f.delta));
    tail += term;
    if (term < 1e-6 * tail || n > 400L * M) {
      tail += term * n / f.delta;
      break;
    }
  }
  if (tail > require_tol) throw std::runtime_error("periodize: tail above requested tolerance");
  return {acc, tail};
}

Complex eval_trig_poly(const ScalarPoly& f, const TorusPoint& s) {
  Complex acc{0.0, 0.0};
  for (const auto& [m, c] : f) {
    double dot = 0.0;
    for (size_t i = 0; i < m.size(); ++i) dot += m[i] * s.s[i];
    acc += c * std::polar(1.0, 2.0 * M_PI * dot);
  }
  return acc;
}

Complex scalar_convolve(const ScalarKernel& kernel, const ScalarPoly& f, const TorusPoint& z,
                        int grid_per_axis) {
  if (grid_per_axis < 1) throw std::invalid_argument("scalar_convolve: grid must be >= 1");
  const int d = z.d();
  const long G = grid_per_axis;
  long total = 1;
  for (int i = 0; i < d; ++i) total *= G;

  std::vector<Complex> partial(G, {0.0, 0.0});
#pragma omp parallel for schedule(static)
  for (long i0 = 0; i0 < G; ++i0) {
    Complex acc{0.0, 0.0};
    std::vector<double> w(d);
    w[0] = static_cast<double>(i0) / G;
    const long inner = total / G;
    for (long rest = 0; rest < inner; ++rest) {
      long r = rest;
      for (int j = d - 1; j >= 1; --j) {
        w[j] = static_cast<double>(r % G) / G;
        r /= G;
      }
      std::vector<double> diff(d);
      for (int j = 0; j < d; ++j) diff[j] = z.s[j] - w[j];
      acc += kernel(TorusPoint(diff)) * eval_trig_poly(f, TorusPoint(w));
    }
    partial[i0] = acc;
  }
  Complex acc{0.0, 0.0};
  for (const Complex& v : partial) acc += v;
  return acc / static_cast<double>(total);
}

ApproxIdentityReport approx_identity_report(const ScalarKernel& kernel, int d, double radius,
                                            int grid_per_axis) {
  if (d < 1 || d > 3) throw std::invalid_argument("approx_identity_report: d must be 1..3");
  const long G = grid_per_axis;
  long total = 1;
  for (int i = 0; i < d; ++i) total *= G;

  std::vector<double> pmass(G, 0.0), pl1(G, 0.0), pout(G, 0.0);
#pragma omp parallel for schedule(static)
  for (long i0 = 0; i0 < G; ++i0) {
    double mass = 0.0, l1 = 0.0, out = 0.0;
    std::vector<double> t(d);
    t[0] = static_cast<double>(i0) / G;
    const long inner = total / G;
    for (long rest = 0; rest < inner; ++rest) {
      long r = rest;
      for (int j = d - 1; j >= 1; --j) {
        t[j] = static_cast<double>(r % G) / G;
        r /= G;
      }
      const double v = kernel(TorusPoint(t));
      mass += v;
      l1 += std::abs(v);
      double dist = 0.0;
      for (int j = 0; j < d; ++j) dist = std::max(dist, circ_dist(t[j]));
      if (dist > radius) out += std::abs(v);
    }
    pmass[i0] = mass;
    pl1[i0] = l1;
    pout[i0] = out;
  }
  ApproxIdentityReport rep;
  for (long i = 0; i < G; ++i) {
    rep.mass += pmass[i];
    rep.l1_norm += pl1[i];
    rep.outside_mass += pout[i];
  }
  const double scale = 1.0 / static_cast<double>(total);
  rep.mass *= scale;
  rep.l1_norm *= scale;
  rep.outside_mass *= scale;
  return rep;
}

}  // namespace qtorus
