#pragma once

#include "bnls/types.hpp"

namespace bnls::sf {

// Complex Gamma function. Lanczos rational approximation on Re z > 0.5,
// reflection formula elsewhere. Relative accuracy ~1e-13 for |z| <= 20.
// Throws pole_error at z in {0, -1, -2, ...}.
Complex gamma(Complex z);

double gamma(double x);

// log Gamma on Re z > 0 (principal value), used where Gamma itself overflows.
Complex log_gamma(Complex z);

// (tau - i0)^{-alpha}: |tau|^{-alpha} for tau > 0, e^{i pi alpha}|tau|^{-alpha}
// for tau < 0. Throws std::domain_error at tau = 0.
Complex power_tau_minus_i0(double tau, Complex alpha);

// B(0) = -(i^{7/4}/pi) Gamma(5/4), i^{7/4} = e^{i 7 pi/8}.
Complex constant_B0();

// M = 1 / (B(0) Gamma(3/4)) = 2 sqrt(2) e^{i pi/8}.
Complex constant_M();

}  // namespace bnls::sf
