#pragma once

#include <complex>

namespace qtorus {

using Complex = std::complex<double>;

// Gamma function for complex argument, Lanczos approximation (g=7, 9 terms)
// with reflection for Re z < 0.5. Relative error below 1e-12 on the ranges
// exercised here (|z| up to ~20 away from the poles).
Complex gamma_complex(Complex z);

// log Gamma on the principal branch, same approximation.
Complex log_gamma_complex(Complex z);

// Bessel function of the first kind, nu >= 0, x >= 0. Power series for
// x <= 12, Hankel large-argument asymptotics beyond. Relative error ~1e-9.
double bessel_j(double nu, double x);

}  // namespace qtorus
