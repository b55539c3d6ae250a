#include "qtorus/reference.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qtorus/multiplier.hpp"

namespace qtorus::ref {

TruncatedRep represent(const QtElement& x, int N, long dim_cap) {
  if (N < 0) throw std::invalid_argument("ref::represent: N must be >= 0");
  FolnerBox box(N, x.d());
  if (box.size() > dim_cap) throw std::invalid_argument("ref::represent: dimension exceeds cap");
  TruncatedRep rep{x.theta(), box, Eigen::MatrixXcd::Zero(box.size(), box.size())};
  for (long row = 0; row < box.size(); ++row) {
    const MultiIndex m = box.at(row);
    for (long col = 0; col < box.size(); ++col) {
      const MultiIndex n = box.at(col);
      const MultiIndex k = sub(m, n);
      const Complex c = x.coeff(k);
      if (c == Complex{0.0, 0.0}) continue;
      rep.mat(row, col) = c * std::polar(1.0, x.theta().bilinear_form(n, k));
    }
  }
  return rep;
}

double fourier_ball_sum(double r, const std::vector<double>& s, int M) {
  const int d = static_cast<int>(s.size());
  if (d < 1 || d > 3) throw std::invalid_argument("ref::fourier_ball_sum: d must be 1..3");
  const long M2 = static_cast<long>(M) * M;
  double acc = 0.0;
  auto termval = [&](long k2, double dot) {
    return std::pow(r, std::sqrt(static_cast<double>(k2))) * std::cos(2.0 * M_PI * dot);
  };
  if (d == 1) {
    for (int m0 = -M; m0 <= M; ++m0) acc += termval(static_cast<long>(m0) * m0, m0 * s[0]);
  } else if (d == 2) {
    for (int m0 = -M; m0 <= M; ++m0)
      for (int m1 = -M; m1 <= M; ++m1) {
        const long k2 = static_cast<long>(m0) * m0 + static_cast<long>(m1) * m1;
        if (k2 <= M2) acc += termval(k2, m0 * s[0] + m1 * s[1]);
      }
  } else {
    for (int m0 = -M; m0 <= M; ++m0)
      for (int m1 = -M; m1 <= M; ++m1)
        for (int m2 = -M; m2 <= M; ++m2) {
          const long k2 = static_cast<long>(m0) * m0 + static_cast<long>(m1) * m1 +
                          static_cast<long>(m2) * m2;
          if (k2 <= M2) acc += termval(k2, m0 * s[0] + m1 * s[1] + m2 * s[2]);
        }
  }
  return acc;
}

double poisson_lattice_sum(double eps, const std::vector<double>& s, int M) {
  const int d = static_cast<int>(s.size());
  if (d < 1 || d > 3) throw std::invalid_argument("ref::poisson_lattice_sum: d must be 1..3");
  const double cd = cd_poisson_constant(d);
  const double e2 = eps * eps;
  const double expo = -0.5 * (d + 1);
  double acc = 0.0;
  std::vector<int> m(d, -M);
  for (;;) {
    double q = e2;
    for (int i = 0; i < d; ++i) {
      const double t = s[i] + m[i];
      q += t * t;
    }
    acc += cd * eps * std::pow(q, expo);
    int i = d - 1;
    while (i >= 0 && m[i] == M) m[i--] = -M;
    if (i < 0) break;
    ++m[i];
  }
  return acc;
}

double grid_mean(const std::function<double(const std::vector<double>&)>& f, int d, int G) {
  if (d < 1 || d > 3) throw std::invalid_argument("ref::grid_mean: d must be 1..3");
  if (G < 1) throw std::invalid_argument("ref::grid_mean: G must be >= 1");
  double acc = 0.0;
  std::vector<int> idx(d, 0);
  std::vector<double> t(d);
  for (;;) {
    for (int i = 0; i < d; ++i) t[i] = static_cast<double>(idx[i]) / G;
    acc += f(t);
    int i = d - 1;
    while (i >= 0 && idx[i] == G - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return acc / std::pow(static_cast<double>(G), d);
}

}  // namespace qtorus::ref
