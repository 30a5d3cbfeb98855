#pragma once

#include "bnls/grid.hpp"
#include "bnls/time_signal.hpp"

namespace bnls::reference {

// Finite-difference grid on [0, xmax]: x_i = i dx, dx = xmax/(nx-1).
struct FDGrid {
    double xmax = 30.0;
    std::size_t nx = 257;
    double T = 1.0;
    std::size_t nt = 257;

    double dx() const { return xmax / static_cast<double>(nx - 1); }
    double dt() const { return T / static_cast<double>(nt - 1); }
    void validate() const;
};

struct FDData {
    TimeSignal f;       // u(t, 0)
    TimeSignal g;       // u_x(t, 0)
    HalfLineSignal u0;  // nx samples on the FD grid
};

// Crank-Nicolson solve of i u_t - u_xxxx + lambda_nl |u|^2 u = 0 on [0, xmax].
// 5-point u_xxxx stencil; the left boundary imposes u = f via the boundary
// node and u_x = g via one ghost node; the right end is clamped u = u_x = 0.
// The cubic term is handled by a two-step fixed-point iteration per step.
// Output field is (nt x nx) on the FD grid.
struct FDField {
    CVec data;  // row-major nt x nx
    FDGrid grid;

    std::span<Complex> row(std::size_t n) { return {data.data() + n * grid.nx, grid.nx}; }
    std::span<const Complex> row(std::size_t n) const {
        return {data.data() + n * grid.nx, grid.nx};
    }
};

FDField cn_solve(const FDData& data, double lambda_nl, const FDGrid& grid);

// Half-line mass-balance residual of an FD solution (linear case).
double fd_mass_balance(const FDField& u);

}  // namespace bnls::reference
