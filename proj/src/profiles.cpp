#include "bnls/profiles.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bnls/errors.hpp"
#include "bnls/linear_propagator.hpp"

namespace bnls::profiles {

namespace {

HalfLineSignal restrict_halfline(const SpaceSignal& phi) {
    const GridSpec& g = phi.grid;
    HalfLineSignal h;
    h.dx = g.dx();
    h.samples.assign(phi.samples.begin() + static_cast<std::ptrdiff_t>(g.origin_index()),
                     phi.samples.end());
    return h;
}

SpaceSignal gaussian(const GridSpec& g, double A, double c, double w, double kappa) {
    SpaceSignal phi = SpaceSignal::zeros(g);
    for (std::size_t m = 0; m < g.nx; ++m) {
        double x = g.x(m);
        phi.samples[m] = A * std::exp(-(x - c) * (x - c) / (2.0 * w * w)) *
                         std::exp(kI * (kappa * x));
    }
    return phi;
}

}  // namespace

solver::BoundaryData zero(const GridSpec& grid) {
    solver::BoundaryData d;
    d.f = TimeSignal::zeros(grid.nt, grid.dt());
    d.g = TimeSignal::zeros(grid.nt, grid.dt());
    d.u0.dx = grid.dx();
    d.u0.samples.assign(grid.nx / 2, Complex(0.0));
    return d;
}

solver::BoundaryData gaussian_pulse(const GridSpec& grid, double amplitude, double center,
                                    double width, double carrier) {
    solver::BoundaryData d = zero(grid);
    SpaceSignal phi = gaussian(grid, amplitude, center, width, carrier);
    d.u0 = restrict_halfline(phi);
    return d;
}

solver::BoundaryData modulated_ramp(const GridSpec& grid, double f_amp, double g_amp,
                                    double omega) {
    solver::BoundaryData d = zero(grid);
    for (std::size_t n = 0; n < grid.nt; ++n) {
        double t = grid.t(n);
        double ramp = 1.0 - std::exp(-(t * t) / 0.09);
        Complex mod = ramp * std::exp(kI * (omega * t));
        d.f.samples[n] = f_amp * mod;
        d.g.samples[n] = g_amp * mod;
    }
    return d;
}

Manufactured manufactured_linear(const GridSpec& grid, double amplitude, double center,
                                 double width, double carrier) {
    Manufactured out;
    SpaceSignal phi = gaussian(grid, amplitude, center, width, carrier);
    out.exact = prop::group_field(phi, grid);
    out.data.f = prop::trace_time(out.exact, 0.0, 0);
    out.data.g = prop::trace_time(out.exact, 0.0, 1);
    out.data.f.causal = true;
    out.data.g.causal = true;
    out.data.u0 = restrict_halfline(phi);
    return out;
}

namespace {

TimeSignal read_signal_csv(const std::string& path, const GridSpec& grid) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open data file: " + path);
    TimeSignal s = TimeSignal::zeros(grid.nt, grid.dt());
    std::string line;
    std::getline(in, line);  // header
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (n >= grid.nt) throw config_error("too many rows in " + path);
        std::istringstream ss(line);
        std::string tok;
        double cols[3] = {0, 0, 0};
        for (double& col : cols) {
            if (!std::getline(ss, tok, ',')) throw config_error("bad row in " + path);
            col = std::stod(tok);
        }
        s.samples[n++] = Complex(cols[1], cols[2]);
    }
    if (n != grid.nt) throw config_error("row count mismatch in " + path);
    return s;
}

}  // namespace

solver::BoundaryData from_files(const std::string& dir, const GridSpec& grid) {
    solver::BoundaryData d = zero(grid);
    d.f = read_signal_csv(dir + "/f.csv", grid);
    d.g = read_signal_csv(dir + "/g.csv", grid);
    d.f.causal = d.g.causal = true;

    std::ifstream in(dir + "/u0.csv");
    if (!in) throw config_error("cannot open data file: " + dir + "/u0.csv");
    std::string line;
    std::getline(in, line);
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (n >= grid.nx / 2) throw config_error("too many rows in u0.csv");
        std::istringstream ss(line);
        std::string tok;
        double cols[3] = {0, 0, 0};
        for (double& col : cols) {
            if (!std::getline(ss, tok, ',')) throw config_error("bad row in u0.csv");
            col = std::stod(tok);
        }
        d.u0.samples[n++] = Complex(cols[1], cols[2]);
    }
    if (n != grid.nx / 2) throw config_error("row count mismatch in u0.csv");
    return d;
}

solver::BoundaryData by_name(const std::string& name, const GridSpec& grid) {
    if (name == "zero") return zero(grid);
    if (name == "gaussian-pulse") return gaussian_pulse(grid);
    if (name == "modulated-ramp") return modulated_ramp(grid);
    if (name == "manufactured-linear") return manufactured_linear(grid).data;
    throw config_error("unknown profile: " + name);
}

}  // namespace bnls::profiles
