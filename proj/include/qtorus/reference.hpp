#pragma once

#include <functional>

#include "qtorus/represent.hpp"

namespace qtorus::ref {

// Serial reference implementations of the parallel hot loops, kept for the
// cross-check tests and the benchmark target. These use the direct entry
// formulas with no tables or slicing.

// entry-by-entry fill: mat(m, n) = coeff(m-n) * phase(n, m-n)
TruncatedRep represent(const QtElement& x, int N, long dim_cap = kDefaultDimCap);

// sum_{|m|_2 <= M} r^{|m|_2} e^{2 pi i m.s}, d <= 3, one std::polar per term
double fourier_ball_sum(double r, const std::vector<double>& s, int M);

// sum_{|m|_inf <= M} phi_eps(s + m) for the R^d Poisson kernel phi_eps
double poisson_lattice_sum(double eps, const std::vector<double>& s, int M);

// (1/G^d) sum over the uniform grid of f(t), d <= 3
double grid_mean(const std::function<double(const std::vector<double>&)>& f, int d, int G);

}  // namespace qtorus::ref
