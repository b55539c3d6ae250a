#include "qtorus/summation.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qtorus/quadrature.hpp"
#include "qtorus/represent.hpp"
#include "qtorus/special.hpp"

namespace qtorus {

MeanMethod mean_method_from_name(const std::string& name) {
  if (name == "fejer") return MeanMethod::Fejer;
  if (name == "square-poisson") return MeanMethod::SquarePoisson;
  if (name == "circular-poisson") return MeanMethod::CircularPoisson;
  if (name == "heat") return MeanMethod::Heat;
  if (name == "bochner-riesz") return MeanMethod::BochnerRiesz;
  if (name == "phi-poisson") return MeanMethod::PhiEps;
  throw std::invalid_argument("unknown summation method: " + name);
}

std::string mean_method_name(MeanMethod m) {
  switch (m) {
    case MeanMethod::Fejer: return "fejer";
    case MeanMethod::SquarePoisson: return "square-poisson";
    case MeanMethod::CircularPoisson: return "circular-poisson";
    case MeanMethod::Heat: return "heat";
    case MeanMethod::BochnerRiesz: return "bochner-riesz";
    case MeanMethod::PhiEps: return "phi-poisson";
  }
  return "?";
}

MultiplierSymbol make_mean_symbol(const MeanSpec& spec, double param, int d) {
  switch (spec.method) {
    case MeanMethod::Fejer:
      return fejer_symbol(static_cast<int>(std::lround(param)), d);
    case MeanMethod::SquarePoisson:
      return square_poisson_symbol(param, d);
    case MeanMethod::CircularPoisson:
      return circular_poisson_symbol(param, d);
    case MeanMethod::Heat:
      return heat_symbol(param, d);
    case MeanMethod::BochnerRiesz:
      return bochner_riesz_symbol(spec.alpha, param, d);
    case MeanMethod::PhiEps: {
      if (!spec.phi) throw std::invalid_argument("make_mean_symbol: PhiEps needs a Phi pair");
      return phi_eps_symbol(*spec.phi, param);
    }
  }
  throw std::invalid_argument("make_mean_symbol: bad method");
}

namespace {

bool schedule_monotone(MeanMethod m, const std::vector<double>& sched) {
  if (sched.empty()) return false;
  const bool increasing = (m == MeanMethod::Fejer || m == MeanMethod::SquarePoisson ||
                           m == MeanMethod::CircularPoisson || m == MeanMethod::BochnerRiesz);
  for (size_t i = 1; i < sched.size(); ++i) {
    if (increasing && sched[i] < sched[i - 1]) return false;
    if (!increasing && sched[i] > sched[i - 1]) return false;
  }
  return true;
}

}  // namespace

double exact_l2_mean_error(const MultiplierSymbol& phi, const QtElement& x, int N_rep) {
  double s = 0.0;
  for (const auto& [m, c] : x.coeffs()) {
    Complex ph{0.0, 0.0};
    if (!phi.support_radius || index_norm2(m) <= *phi.support_radius) ph = phi.eval(m);
    const double w = std::norm(Complex{1.0, 0.0} - ph) * std::norm(c);
    s += w * folner_overlap(N_rep, m).value();
  }
  return std::sqrt(s);
}

std::vector<ConvergenceRow> mean_convergence_table(const QtElement& x, const MeanSpec& spec,
                                                   double p, const std::vector<double>& schedule,
                                                   int N_rep) {
  if (!schedule_monotone(spec.method, schedule))
    throw std::invalid_argument("mean_convergence_table: schedule not monotone in the convergence direction");
  if (p < 1.0 && !std::isinf(p))
    throw std::invalid_argument("mean_convergence_table: p must be >= 1 or inf");
  if (FolnerBox(N_rep, x.d()).size() > kDefaultDimCap)
    throw std::invalid_argument("mean_convergence_table: representation exceeds the dimension cap");
  for (double param : schedule) make_mean_symbol(spec, param, x.d());  // fail fast outside the pool
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<ConvergenceRow> rows(schedule.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < schedule.size(); ++i) {
    const double param = schedule[i];
    ConvergenceRow row;
    row.param = param;
    try {
      const MultiplierSymbol phi = make_mean_symbol(spec, param, x.d());
      const QtElement diff = apply_multiplier(phi, x) - x;
      row.error = lp_norm_estimate(diff, p, N_rep);
      if (p == 2.0) {
        row.exact_error = exact_l2_mean_error(phi, x, N_rep);
        row.defect = std::abs(row.error - row.exact_error);
      } else {
        row.exact_error = nan;
        row.defect = nan;
      }
    } catch (const std::exception&) {
      // a failed row must not take the table down; NaN marks the abort
      row.error = row.exact_error = row.defect = nan;
    }
    rows[i] = row;
  }
  return rows;
}

namespace {

using Cx = Complex;

void require_converged(const QuadratureResult& q, const char* route, double v) {
  if (!q.converged) {
    std::ostringstream os;
    os << "br_recurrence_check: " << route << " quadrature did not converge at v=" << v
       << " (error estimate " << q.error_estimate << ", " << q.evaluations << " evaluations)";
    throw std::runtime_error(os.str());
  }
}

Cx direct_route(Cx beta, double delta, double v, double tol, const Cx& C) {
  QuadratureOptions opt;
  opt.abs_tol = tol;
  auto f = [&](double t) -> Cx {
    const double base = 1.0 - t * t;
    const Cx left = std::pow(Cx{base, 0.0}, beta - 1.0);
    const double mid = std::pow(t, 2.0 * delta + 1.0);
    const double cone = 1.0 - v * v / (t * t);
    const double right = cone > 0.0 ? std::pow(cone, delta) : 0.0;
    return left * mid * right;
  };
  const auto q = integrate_gk(f, v, 1.0, opt);
  require_converged(q, "direct", v);
  return C * q.value;
}

Cx substituted_route(Cx beta, double delta, double v, double tol, const Cx& C) {
  // t^2 = v^2 + (1 - v^2) u maps the integral to
  // (1/2) (1-v^2)^{beta+delta} int_0^1 (1-u)^{beta-1} u^delta du
  QuadratureOptions opt;
  opt.abs_tol = tol;
  auto f = [&](double u) -> Cx {
    return std::pow(Cx{1.0 - u, 0.0}, beta - 1.0) * std::pow(u, delta);
  };
  const auto q = integrate_gk(f, 0.0, 1.0, opt);
  require_converged(q, "substituted", v);
  const Cx scale = 0.5 * std::pow(Cx{1.0 - v * v, 0.0}, beta + delta);
  return C * scale * q.value;
}

}  // namespace

double br_recurrence_check(Complex beta, double delta, const std::vector<double>& v_grid,
                           double quad_tol) {
  if (beta.real() <= 0.0) throw std::invalid_argument("br_recurrence_check: need Re(beta) > 0");
  if (delta <= -0.5) throw std::invalid_argument("br_recurrence_check: need delta > -1/2");
  for (double v : v_grid)
    if (v < 0.0 || v > 1.0) throw std::invalid_argument("br_recurrence_check: v outside [0,1]");
  const Complex C =
      2.0 * gamma_complex(beta + delta + 1.0) /
      (gamma_complex(Complex{delta + 1.0, 0.0}) * gamma_complex(beta));

  std::vector<double> defects(v_grid.size(), 0.0);
  std::vector<std::string> failures(v_grid.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < v_grid.size(); ++i) {
    const double v = v_grid[i];
    try {
      const Complex lhs = v < 1.0 ? std::pow(Complex{1.0 - v * v, 0.0}, beta + delta)
                                  : Complex{0.0, 0.0};
      const Complex direct = direct_route(beta, delta, v, quad_tol, C);
      const Complex subst = substituted_route(beta, delta, v, quad_tol, C);
      defects[i] = std::max(std::abs(lhs - direct), std::abs(lhs - subst));
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (const auto& f : failures)
    if (!f.empty()) throw std::runtime_error(f);
  double worst = 0.0;
  for (double d : defects) worst = std::max(worst, d);
  return worst;
}

}  // namespace qtorus
