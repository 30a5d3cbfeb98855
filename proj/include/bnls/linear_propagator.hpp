#pragma once

#include "bnls/grid.hpp"
#include "bnls/time_signal.hpp"

namespace bnls::prop {

// Dispersion sign: the equation is i u_t + gamma_disp u_xxxx = 0 with
// gamma_disp = -1 by default, i.e. the group multiplier e^{i gamma t xi^4}.
inline constexpr double kDefaultDispersion = -1.0;

// Free group e^{it dx^4} applied on the discrete frequency lattice.
SpaceSignal group_evolve(const SpaceSignal& phi, double t,
                         double gamma_disp = kDefaultDispersion);

// Field whose row n is group_evolve(phi, t_n).
Field group_field(const SpaceSignal& phi, const GridSpec& grid,
                  double gamma_disp = kDefaultDispersion);

// Duhamel operator D w(t) = -i int_0^t e^{i(t-t') dx^4} w(t') dt'.
// Per mode the phase factor is integrated exactly against the piecewise
// linear interpolant of w (uniform second order in dt for every mode).
// fast_path = false recomputes each output time from scratch (quadratic).
Field duhamel_D(const Field& w, double gamma_disp = kDefaultDispersion,
                bool fast_path = true);

// d^j/dx^j u(., x0) by spectral differentiation + cubic interpolation.
TimeSignal trace_time(const Field& u, double x0, int j);

// Spectral x-derivative of order j of one spatial signal.
SpaceSignal spectral_derivative(const SpaceSignal& phi, int j);

// Cubic Lagrange interpolation of a gridded spatial signal at x0.
Complex interp_space(std::span<const Complex> row, const GridSpec& grid, double x0);

double l2_norm(const SpaceSignal& phi);

}  // namespace bnls::prop
