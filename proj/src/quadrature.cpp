#include "qtorus/quadrature.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace qtorus {

namespace {

// 15-point Kronrod nodes (positive half) and weights, with the embedded
// 7-point Gauss weights. QUADPACK dqk15 constants.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using Cx = std::complex<double>;

struct Panel {
  double a, b;
  Cx value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const std::function<Cx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Cx fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  Cx kron = kWgk[7] * fv[7];
  for (int i = 0; i < 7; ++i) kron += kWgk[i] * (fv[i] + fv[14 - i]);
  Cx gauss = kWg[3] * fv[7];
  for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  Panel p;
  p.a = a;
  p.b = b;
  p.value = h * kron;
  // conservative estimate: |K15 - G7| overestimates the K15 error
  p.error = std::abs(h) * std::abs(kron - gauss);
  if (p.error < 1e-300) p.error = 1e-300;
  return p;
}

}  // namespace

QuadratureResult integrate_gk(const std::function<Cx(double)>& f, double a, double b,
                              const QuadratureOptions& opt) {
  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Panel> panels;
  panels.push(eval_panel(f, a, b));
  res.evaluations = 15;
  Cx total = panels.top().value;
  double total_err = panels.top().error;

  while (total_err > opt.abs_tol && res.evaluations + 30 <= opt.max_evaluations) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at floating resolution; keep its estimate and stop splitting
      panels.push(worst);
      break;
    }
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    res.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // re-accumulate from panels for a stable total
  total = Cx(0.0, 0.0);
  total_err = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_err += panels.top().error;
    panels.pop();
  }
  res.value = total;
  res.error_estimate = total_err;
  res.converged = total_err <= opt.abs_tol;
  return res;
}

QuadratureResult integrate_gk_real(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureOptions& opt) {
  return integrate_gk([&f](double t) { return Cx(f(t), 0.0); }, a, b, opt);
}

}  // namespace qtorus
