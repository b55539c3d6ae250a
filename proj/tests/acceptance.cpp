// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qtorus/experiments.hpp"
#include "qtorus/hardy.hpp"
#include "qtorus/kernels.hpp"
#include "qtorus/schur.hpp"
#include "qtorus/transference.hpp"

using namespace qtorus;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

QtElement draw_element(const Theta& th, int degree, int terms, Rng& rng) {
  return random_element(th, degree, terms, rng);
}

// 1. algebra soundness ------------------------------------------------------
bool crit_algebra(std::string& detail) {
  double worst_assoc = 0.0, worst_comm = 0.0, worst_parseval = 0.0, worst_tracial = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = Rng::for_row(101, trial);
    const int d = 2 + trial % 2;
    const Theta th = random_theta(d, rng);
    const QtElement x = draw_element(th, 3, 5, rng);
    const QtElement y = draw_element(th, 3, 5, rng);
    const QtElement z = draw_element(th, 3, 5, rng);

    worst_assoc = std::max(worst_assoc, max_coeff_abs(mul(mul(x, y), z) - mul(x, mul(y, z))));

    for (int k = 1; k <= d; ++k)
      for (int j = 1; j <= d; ++j) {
        if (j == k) continue;
        const QtElement lhs = mul(QtElement::generator(th, k), QtElement::generator(th, j));
        const QtElement rhs = std::polar(1.0, 2.0 * M_PI * th.entry(k - 1, j - 1)) *
                              mul(QtElement::generator(th, j), QtElement::generator(th, k));
        worst_comm = std::max(worst_comm, max_coeff_abs(lhs - rhs));
      }

    double parseval = 0.0;
    for (const auto& [m, c] : x.coeffs()) parseval += std::norm(c);
    worst_parseval =
        std::max(worst_parseval, std::abs(trace(mul(adjoint(x), x)) - Complex{parseval, 0.0}));

    worst_tracial = std::max(worst_tracial, std::abs(trace(mul(x, y)) - trace(mul(y, x))));
  }
  std::ostringstream os;
  os << "assoc=" << worst_assoc << " comm=" << worst_comm << " parseval=" << worst_parseval
     << " tracial=" << worst_tracial;
  detail = os.str();
  return worst_assoc <= 1e-12 && worst_comm <= 1e-15 && worst_parseval <= 1e-12 &&
         worst_tracial <= 1e-12;
}

// 2. twisted Toeplitz fidelity ----------------------------------------------
bool crit_toeplitz(std::string& detail) {
  double worst_fs = 0.0, worst_compress = 0.0, worst_trace = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::for_row(202, trial);
    const int d = 1 + trial % 3;
    const int N = rng.uniform_int(1, d == 3 ? 2 : 4);
    const Theta th = random_theta(d, rng);
    const QtElement x = draw_element(th, 3, 6, rng);
    const uint64_t h = rng.next_u64();
    MultiplierSymbol phi;
    phi.d = d;
    phi.eval = [h](const MultiIndex& m) {
      uint64_t k = h;
      for (int v : m) k = k * 1099511628211ULL + static_cast<uint64_t>(v + 7919);
      Rng local(k);
      return Complex{local.uniform(-1.0, 1.0), local.uniform(-1.0, 1.0)};
    };
    worst_fs = std::max(worst_fs, fs_identity_check(phi, x, N));

    // B_N A_N on monomials against the exact rational overlap
    MultiIndex k(d);
    for (auto& v : k) v = rng.uniform_int(-2 * N, 2 * N);
    const QtElement back = folner_compress(represent(QtElement::monomial(th, k), N));
    worst_compress = std::max(
        worst_compress, std::abs(back.coeff(k) - Complex{folner_overlap(N, k).value(), 0.0}));

    worst_trace = std::max(worst_trace,
                           std::abs(normalized_trace(represent(x, N)) - trace(x)));
  }
  std::ostringstream os;
  os << "fs=" << worst_fs << " compress=" << worst_compress << " trace=" << worst_trace;
  detail = os.str();
  // "exact" trace preservation: the diagonal is constant, so the defect is
  // pure float accumulation over dim terms
  return worst_fs <= 1e-13 && worst_compress <= 1e-14 && worst_trace <= 1e-13;
}

// 3. norm machinery ----------------------------------------------------------
bool crit_norms(std::string& detail) {
  double worst_parseval = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::for_row(303, trial);
    const int d = 1 + trial % 3;
    const int N = rng.uniform_int(1, d == 3 ? 2 : 4);
    const Theta th = random_theta(d, rng);
    const QtElement x = draw_element(th, 3, 6, rng);
    const double s2 = schatten_norm(represent(x, N), 2.0);
    double weighted = 0.0;
    for (const auto& [m, c] : x.coeffs()) weighted += std::norm(c) * folner_overlap(N, m).value();
    worst_parseval = std::max(worst_parseval, std::abs(s2 * s2 - weighted));
  }

  bool monotone = true;
  {
    Rng rng = Rng::for_row(303, 9999);
    const Theta th = random_theta(2, rng);
    const QtElement x = draw_element(th, 2, 6, rng);
    double prev = 0.0;
    for (int N = 1; N <= 6; ++N) {
      const double v = op_norm(represent(x, N));
      if (v < prev - 1e-12) monotone = false;
      prev = v;
    }
  }

  double min_eig = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = Rng::for_row(304, trial);
    const Theta th = random_theta(2, rng);
    const QtElement y = draw_element(th, 2, 5, rng);
    min_eig = std::min(min_eig, min_eigenvalue(represent(mul(adjoint(y), y), 3), 1e-8));
  }
  std::ostringstream os;
  os << "parseval_defect=" << worst_parseval << " monotone=" << monotone
     << " min_eig=" << min_eig;
  detail = os.str();
  return worst_parseval <= 1e-10 && monotone && min_eig >= -1e-10;
}

// 4. mean convergence --------------------------------------------------------
bool crit_convergence(std::string& detail) {
  const int d = 2;
  const Theta th = Theta::golden(d);
  const QtElement x = standard_test_element(th);
  double worst_defect = 0.0, worst_final = 0.0;
  for (const auto& [spec, schedule] : acceptance_mean_specs(d)) {
    const auto rows = mean_convergence_table(x, spec, 2.0, schedule, 4);
    for (const auto& row : rows) worst_defect = std::max(worst_defect, row.defect);
    worst_final = std::max(worst_final, rows.back().error);
  }
  std::ostringstream os;
  os << "closed_form_defect=" << worst_defect << " final_error=" << worst_final;
  detail = os.str();
  return worst_defect <= 1e-10 && worst_final <= 1e-3;
}

// 5. Bochner-Riesz recurrence -----------------------------------------------
bool crit_recurrence(std::string& detail) {
  std::vector<double> grid;
  for (int i = 0; i < 64; ++i) grid.push_back(static_cast<double>(i) / 63.0);
  double worst = 0.0;
  worst = std::max(worst, br_recurrence_check({2.0, 0.0}, 0.25, grid));
  worst = std::max(worst, br_recurrence_check({1.5, 0.0}, -0.25, grid));
  worst = std::max(worst, br_recurrence_check({3.0, 0.0}, 1.0, grid));
  worst = std::max(worst, br_recurrence_check({2.0, 1.0}, 0.5, grid));
  std::ostringstream os;
  os << "max_defect=" << worst;
  detail = os.str();
  return worst <= 1e-8;
}

// 6. Poisson summation -------------------------------------------------------
bool crit_poisson_summation(std::string& detail) {
  double worst = 0.0, worst_d1 = 0.0;
  for (int d = 1; d <= 3; ++d) {
    const int M = d == 1 ? 200 : (d == 2 ? 64 : 100);
    for (double r : {0.3, 0.5, 0.7, 0.9}) {
      for (int t = 0; t < 20; ++t) {
        Rng rng = Rng::for_row(606, d * 1000 + static_cast<int>(r * 100) + t);
        std::vector<double> coords(d);
        for (auto& v : coords) v = rng.uniform();
        const TorusPoint s(coords);
        const TwoPathPoisson tp = circular_poisson_paths(r, s, M);
        worst = std::max(worst, std::abs(tp.fourier - tp.periodized));
        if (d == 1)
          worst_d1 = std::max(worst_d1, std::abs(tp.periodized - square_poisson_kernel(r, s)));
      }
    }
  }
  std::ostringstream os;
  os << "two_path=" << worst << " d1_coincidence=" << worst_d1;
  detail = os.str();
  return worst <= 1e-6 && worst_d1 <= 1e-8;
}

// 7. kernel diagnostics ------------------------------------------------------
bool crit_kernel_diagnostics(std::string& detail) {
  double worst_mass = 0.0;
  bool decreasing = true, nonneg = true, fejer_bound = true;

  double prev = std::numeric_limits<double>::max();
  for (int N : {1, 2, 4, 8, 16, 32, 64}) {
    const ScalarKernel k = [N](const TorusPoint& s) { return fejer_kernel(N, s); };
    const ApproxIdentityReport rep = approx_identity_report(k, 1, 0.1, std::max(1024, 2 * N + 2));
    worst_mass = std::max(worst_mass, std::abs(rep.mass - 1.0));
    if (rep.outside_mass >= prev) decreasing = false;
    prev = rep.outside_mass;
  }
  prev = std::numeric_limits<double>::max();
  for (double r : {0.5, 0.75, 0.875, 0.9375, 0.96875}) {
    const ScalarKernel k = [r](const TorusPoint& s) { return square_poisson_kernel(r, s); };
    const ApproxIdentityReport rep = approx_identity_report(k, 1, 0.1, 2048);
    worst_mass = std::max(worst_mass, std::abs(rep.mass - 1.0));
    if (rep.outside_mass >= prev) decreasing = false;
    prev = rep.outside_mass;
  }

  Rng rng = Rng::for_row(707, 0);
  for (int i = 0; i < 400; ++i) {
    const TorusPoint s(std::vector<double>{rng.uniform(), rng.uniform()});
    if (fejer_kernel(5, s) < -1e-12 || square_poisson_kernel(0.6, s) < -1e-12) nonneg = false;
  }
  for (int N : {1, 4, 16, 64}) {
    for (int i = 0; i < 1024; ++i) {
      const double s = -0.5 + (i + 0.5) / 1024.0;
      const double bound = 0.5 * M_PI * M_PI * (N + 1) / (1.0 + (N + 1.0) * (N + 1.0) * s * s);
      if (fejer_kernel_1d(N, s) > bound * (1.0 + 1e-12)) fejer_bound = false;
    }
  }
  std::ostringstream os;
  os << "mass_defect=" << worst_mass << " outside_decreasing=" << decreasing
     << " nonneg=" << nonneg << " fejer_bound=" << fejer_bound;
  detail = os.str();
  return worst_mass <= 1e-6 && decreasing && nonneg && fejer_bound;
}

// 8. transference ------------------------------------------------------------
bool crit_transference(std::string& detail) {
  double worst_action = 0.0, worst_iso2 = 0.0, worst_probe = 0.0, worst_exp = 0.0;
  bool contractive = true;
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = Rng::for_row(808, trial);
    const Theta th = random_theta(2, rng);
    const QtElement x = draw_element(th, 2, 5, rng);
    const TorusPoint z(std::vector<double>{rng.uniform(), rng.uniform()});
    const TorusPoint w(std::vector<double>{rng.uniform(), rng.uniform()});
    const TorusPoint zw(std::vector<double>{z.s[0] + w.s[0], z.s[1] + w.s[1]});
    worst_action = std::max(worst_action, max_coeff_abs(pi_z(pi_z(x, z), w) - pi_z(x, zw)));
    worst_iso2 = std::max(worst_iso2, std::abs(l2_norm(pi_z(x, z)) - l2_norm(x)));

    // E fixes twist images, idempotent, contractive
    OperatorTrigPoly f = twist(x);
    f.set_term({1, 0}, draw_element(th, 1, 2, rng));  // off-diagonal pollution
    const OperatorTrigPoly once = conditional_expectation(f);
    const OperatorTrigPoly twice = conditional_expectation(once);
    for (const auto& [n, fn] : once.terms)
      worst_exp = std::max(worst_exp, max_coeff_abs(twice.terms.at(n) - fn));
    if (opvalued_l2_norm(once) > opvalued_l2_norm(f) + 1e-12) contractive = false;
    const OperatorTrigPoly fixed = conditional_expectation(twist(x));
    for (const auto& [n, fn] : twist(x).terms)
      worst_exp = std::max(worst_exp, max_coeff_abs(fixed.terms.at(n) - fn));
  }
  // lp isometry probes at p in {1.5, 4}
  for (int trial = 0; trial < 5; ++trial) {
    Rng rng = Rng::for_row(809, trial);
    const Theta th = random_theta(2, rng);
    const QtElement x = draw_element(th, 2, 5, rng);
    std::vector<TorusPoint> zs;
    for (int i = 0; i < 8; ++i)
      zs.push_back(TorusPoint(std::vector<double>{rng.uniform(), rng.uniform()}));
    worst_probe = std::max(worst_probe, lp_isometry_probe(x, 1.5, zs, 4));
    worst_probe = std::max(worst_probe, lp_isometry_probe(x, 4.0, zs, 4));
  }
  std::ostringstream os;
  os << "group_action=" << worst_action << " l2_iso=" << worst_iso2
     << " lp_probe=" << worst_probe << " expectation=" << worst_exp
     << " contractive=" << contractive;
  detail = os.str();
  // Parseval isometry defect is one rounding of |phase * c|^2 per coefficient
  return worst_action <= 1e-12 && worst_iso2 <= 1e-13 && worst_probe <= 1e-8 &&
         worst_exp == 0.0 && contractive;
}

// 9. Hardy/BMO ---------------------------------------------------------------
bool crit_hardy_bmo(std::string& detail) {
  const Theta th = Theta::golden(2);
  // closed forms
  double worst_closed = 0.0;
  for (const MultiIndex k : {MultiIndex{1, 0}, MultiIndex{1, 1}, MultiIndex{2, -1}}) {
    const QtElement g = g_square(QtElement::monomial(th, k));
    const double nk = index_norm2(k);
    const double expected = nk * nk * (1.0 / (2.0 * nk - 1.0) - 1.0 / (2.0 * nk));
    worst_closed = std::max(worst_closed, std::abs(g.coeff({0, 0}) - Complex{expected, 0.0}));
    worst_closed = std::max(worst_closed, static_cast<double>(g.support_size() > 1));
  }

  double min_eig = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = Rng::for_row(909, trial);
    const Theta t = random_theta(2, rng);
    const QtElement x = draw_element(t, 2, 4, rng);
    min_eig = std::min(min_eig, min_eigenvalue(represent(g_square(x), 4), 1e-8));
    for (const auto v : {BmoVariant::Standard, BmoVariant::Garsia})
      min_eig = std::min(min_eig,
                         min_eigenvalue(represent(bmo_inner_element(x, v, 0.7), 4), 1e-8));
  }

  bool garsia_ok = true;
  const auto grid = default_bmo_r_grid();
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::for_row(910, trial);
    const Theta t = random_theta(2, rng);
    const QtElement a = draw_element(t, 2, 4, rng);
    const GarsiaReport rep = garsia_equivalence_check(a + adjoint(a), grid, 3);
    if (!rep.bounds_ok) garsia_ok = false;
  }

  double convexity_min = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = Rng::for_row(911, trial);
    const Theta t = random_theta(2, rng);
    const QtElement f = draw_element(t, 2, 4, rng);
    for (double r : {0.2, 0.5, 0.9})
      convexity_min = std::min(convexity_min, convexity_check(f, r, 3));
  }
  std::ostringstream os;
  os << "closed_form=" << worst_closed << " min_eig=" << min_eig << " garsia=" << garsia_ok
     << " convexity_min=" << convexity_min;
  detail = os.str();
  return worst_closed <= 1e-12 && min_eig >= -1e-10 && garsia_ok && convexity_min >= -1e-10;
}

// 10. anticommuting example --------------------------------------------------
bool crit_anticommuting(std::string& detail) {
  double worst_identity = 0.0;
  bool sandwich = true;
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = Rng::for_row(1010, trial);
    const int K = 2 + trial % 2;
    std::vector<Complex> alpha(K);
    for (auto& a : alpha) a = rng.complex_in_disc();
    const AnticommutingReport rep = anticommuting_probe(alpha, 3, 1e-8);
    worst_identity = std::max(worst_identity, rep.identity_defect);
    if (!rep.sandwich_ok) sandwich = false;
  }
  std::ostringstream os;
  os << "identity_defect=" << worst_identity << " sandwich=" << sandwich;
  detail = os.str();
  return worst_identity <= 1e-12 && sandwich;
}

// 11. experimental reports (non-gating numerics; must execute and be well formed)
bool crit_experimental(std::string& detail) {
  namespace fs = std::filesystem;
  const std::string out = (fs::temp_directory_path() / "qtorus-acceptance").string();
  bool ok = true;
  std::ostringstream os;

  {
    ExperimentConfig c;
    c.subcommand = "lusin";
    c.d = 1;
    c.p = 2.0;
    c.beta = 1.0;
    c.out = out + "/lusin";
    const RunResult r = run_experiment(c);
    ok = ok && fs::exists(fs::path(c.out) / "lusin.json") &&
         fs::exists(fs::path(c.out) / "manifest.json");
    os << "lusin_exit=" << r.exit_code;
  }
  {
    ExperimentConfig c;
    c.subcommand = "stein-sweep";
    c.d = 3;
    c.N_rep = 3;
    c.out = out + "/stein";
    const RunResult r = run_experiment(c);
    ok = ok && fs::exists(fs::path(c.out) / "stein-sweep.csv");
    os << " stein_exit=" << r.exit_code;
  }
  {
    ExperimentConfig c;
    c.subcommand = "hardy";
    c.d = 2;
    c.N_rep = 3;
    c.trials = 5;
    c.degree = 2;
    c.terms = 4;
    c.out = out + "/hardy";
    const RunResult r = run_experiment(c);
    ok = ok && fs::exists(fs::path(c.out) / "hardy.json");
    // duality table must be present and well formed
    std::ifstream f(fs::path(c.out) / "hardy.json");
    Json j;
    f >> j;
    ok = ok && j.contains("duality_ratio_table") && j["duality_ratio_table"].size() == 5;
    os << " hardy_exit=" << r.exit_code;
  }
  detail = os.str();
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "algebra soundness", crit_algebra},
      {2, "twisted Toeplitz fidelity", crit_toeplitz},
      {3, "norm machinery", crit_norms},
      {4, "mean convergence", crit_convergence},
      {5, "Bochner-Riesz recurrence", crit_recurrence},
      {6, "Poisson summation", crit_poisson_summation},
      {7, "kernel diagnostics", crit_kernel_diagnostics},
      {8, "transference", crit_transference},
      {9, "Hardy/BMO", crit_hardy_bmo},
      {10, "anticommuting example", crit_anticommuting},
      {11, "experimental reports", crit_experimental},
  };

  int failures = 0;
  for (auto& c : criteria) {
    const double t0 = now_s();
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double dt = now_s() - t0;
    std::printf("[%s] criterion %2d: %-28s (%.1fs) %s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), dt, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
