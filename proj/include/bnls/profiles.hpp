#pragma once

#include <string>

#include "bnls/grid.hpp"
#include "bnls/ibvp_solver.hpp"

namespace bnls::profiles {

// Named analytic data profiles (no external files needed).
solver::BoundaryData zero(const GridSpec& grid);

// Interior Gaussian packet with zero boundary traces.
solver::BoundaryData gaussian_pulse(const GridSpec& grid, double amplitude = 0.5,
                                    double center = 8.0, double width = 1.5,
                                    double carrier = 0.0);

// Zero initial data with smoothly ramped modulated boundary traces.
solver::BoundaryData modulated_ramp(const GridSpec& grid, double f_amp = 0.2,
                                    double g_amp = 0.1, double omega = 2.0);

// Data read off a whole-line group solution, plus that exact solution.
struct Manufactured {
    solver::BoundaryData data;
    Field exact;
};
Manufactured manufactured_linear(const GridSpec& grid, double amplitude = 1.0,
                                 double center = 8.0, double width = 1.5,
                                 double carrier = -0.5);

// CSV data: f.csv, g.csv with rows t,re,im and u0.csv with rows x,re,im;
// sample counts must match the grid.
solver::BoundaryData from_files(const std::string& dir, const GridSpec& grid);

solver::BoundaryData by_name(const std::string& name, const GridSpec& grid);

}  // namespace bnls::profiles
