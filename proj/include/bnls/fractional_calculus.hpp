#pragma once

#include "bnls/time_signal.hpp"

namespace bnls::frac {

// Riemann-Liouville fractional integral of order alpha > 0 of a causal
// signal: (1/Gamma(alpha)) int_0^t (t-s)^{alpha-1} f(s) ds on f's grid.
// Product-trapezoidal rule: f piecewise linear, the weakly singular
// kernel moments (t-s)^{alpha-1} integrated exactly per subinterval.
TimeSignal frac_integral(const TimeSignal& f, double alpha);

// Orders alpha <= 0 by differentiating I_{alpha+k}: d^k/dt^k applied with
// second-order central differences (one-sided at the ends). alpha = 0 is
// the identity. k must satisfy alpha + k > 0.
TimeSignal frac_derivative(const TimeSignal& f, double alpha, int k);

// Same, with the smallest k putting alpha + k in (1/2, 3/2].
TimeSignal frac_derivative(const TimeSignal& f, double alpha);
int default_diff_order(double alpha);

// Smooth cutoff: 1 on [0,1], 0 for |t| >= 2, monotone on [-2,0] and [1,2].
double cutoff_psi(double t);

// Second-order finite-difference time derivative on a uniform grid.
TimeSignal derivative(const TimeSignal& f);

}  // namespace bnls::frac
