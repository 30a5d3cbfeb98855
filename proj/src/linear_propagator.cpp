#include "bnls/linear_propagator.hpp"

#include <cmath>

#include "bnls/diag.hpp"
#include "bnls/errors.hpp"
#include "bnls/etd.hpp"
#include "bnls/fft.hpp"

namespace bnls::prop {

namespace {

void aliasing_check(const CVec& hat, const GridSpec& g, const char* who) {
    double top = 0.0, total = 0.0;
    for (std::size_t k = 0; k < g.nx; ++k) {
        double e = std::norm(hat[k]);
        total += e;
        if (std::abs(g.freq(k)) > (2.0 / 3.0) * g.freq_max()) top += e;
    }
    if (total > 0.0 && std::sqrt(top) > 1e-6 * std::sqrt(total))
        diag::warn("aliasing", std::string(who) + ": upper-third spectral energy above 1e-6");
}

void support_check(const SpaceSignal& phi) {
    double inner = 0.0, total = 0.0;
    const auto& g = phi.grid;
    for (std::size_t m = 0; m < g.nx; ++m) {
        double e = std::norm(phi.samples[m]);
        total += e;
        if (std::abs(g.x(m)) <= g.L / 2.0) inner += e;
    }
    if (total > 0.0 && inner < (1.0 - 1e-8) * total)
        diag::warn("edge-support", "group_evolve: input mass near domain edges");
}

}  // namespace

SpaceSignal group_evolve(const SpaceSignal& phi, double t, double gamma_disp) {
    phi.grid.validate();
    support_check(phi);
    CVec hat = phi.samples;
    fft::forward(hat);
    aliasing_check(hat, phi.grid, "group_evolve");
    const auto& g = phi.grid;
    for (std::size_t k = 0; k < g.nx; ++k) {
        double xi = g.freq(k);
        double xi4 = xi * xi * xi * xi;
        hat[k] *= std::exp(kI * (gamma_disp * t * xi4));
    }
    fft::backward(hat);
    SpaceSignal out(std::move(hat), g);
    const double inv = 1.0 / static_cast<double>(g.nx);
    for (auto& v : out.samples) v *= inv;
    return out;
}

Field group_field(const SpaceSignal& phi, const GridSpec& grid, double gamma_disp) {
    grid.validate();
    if (phi.grid.nx != grid.nx || phi.grid.L != grid.L)
        throw config_error("group_field: spatial grid mismatch");
    support_check(phi);
    CVec hat = phi.samples;
    fft::forward(hat);
    aliasing_check(hat, grid, "group_field");

    Field out(grid);
    diag::parallel_for(grid.nt, [&](std::size_t n) {
        CVec row(hat);
        double t = grid.t(n);
        for (std::size_t k = 0; k < grid.nx; ++k) {
            double xi = grid.freq(k);
            double xi4 = xi * xi * xi * xi;
            row[k] *= std::exp(kI * (gamma_disp * t * xi4));
        }
        fft::backward(row);
        auto dst = out.row(n);
        const double inv = 1.0 / static_cast<double>(grid.nx);
        for (std::size_t m = 0; m < grid.nx; ++m) dst[m] = row[m] * inv;
    });
    return out;
}

Field duhamel_D(const Field& w, double gamma_disp, bool fast_path) {
    const GridSpec& g = w.grid;
    g.validate();

    // mode-major layout of the row transforms
    CVec hat(g.nt * g.nx);
    diag::parallel_for(g.nt, [&](std::size_t n) {
        CVec row(w.row(n).begin(), w.row(n).end());
        fft::forward(row);
        for (std::size_t k = 0; k < g.nx; ++k) hat[n * g.nx + k] = row[k];
    });

    CVec res(g.nt * g.nx);
    diag::parallel_for(g.nx, [&](std::size_t k) {
        double xi = g.freq(k);
        Complex m = kI * gamma_disp * (xi * xi * xi * xi);
        CVec gk(g.nt);
        for (std::size_t n = 0; n < g.nt; ++n) gk[n] = hat[n * g.nx + k];
        CVec I = fast_path ? etd::phase_history(m, g.dt(), gk)
                           : etd::phase_history_naive(m, g.dt(), gk);
        for (std::size_t n = 0; n < g.nt; ++n) res[n * g.nx + k] = -kI * I[n];
    });

    Field out(g);
    diag::parallel_for(g.nt, [&](std::size_t n) {
        CVec row(res.begin() + n * g.nx, res.begin() + (n + 1) * g.nx);
        fft::backward(row);
        auto dst = out.row(n);
        const double inv = 1.0 / static_cast<double>(g.nx);
        for (std::size_t mm = 0; mm < g.nx; ++mm) dst[mm] = row[mm] * inv;
    });
    return out;
}

SpaceSignal spectral_derivative(const SpaceSignal& phi, int j) {
    if (j < 0) throw config_error("spectral_derivative: negative order");
    CVec hat = phi.samples;
    fft::forward(hat);
    const auto& g = phi.grid;
    for (std::size_t k = 0; k < g.nx; ++k) {
        double xi = g.freq(k);
        // Nyquist mode has no well-defined sign; drop it for odd orders
        if (k == g.nx / 2 && (j % 2) == 1) {
            hat[k] = 0.0;
            continue;
        }
        hat[k] *= std::pow(kI * xi, j);
    }
    fft::backward(hat);
    SpaceSignal out(std::move(hat), g);
    const double inv = 1.0 / static_cast<double>(g.nx);
    for (auto& v : out.samples) v *= inv;
    return out;
}

Complex interp_space(std::span<const Complex> row, const GridSpec& g, double x0) {
    if (x0 < -g.L || x0 >= g.L - g.dx() * 0.5) throw config_error("interp_space: x0 outside grid");
    double pos = (x0 + g.L) / g.dx();
    auto m = static_cast<std::ptrdiff_t>(std::floor(pos));
    double frac = pos - static_cast<double>(m);
    if (std::abs(frac) < 1e-12) return row[static_cast<std::size_t>(m)];
    if (frac > 1.0 - 1e-12) return row[static_cast<std::size_t>(m + 1) % g.nx];

    // cubic Lagrange on nodes m-1..m+2 (periodic wrap)
    auto node = [&](std::ptrdiff_t i) -> Complex {
        std::ptrdiff_t n = i;
        auto nxs = static_cast<std::ptrdiff_t>(g.nx);
        n = ((n % nxs) + nxs) % nxs;
        return row[static_cast<std::size_t>(n)];
    };
    double u = frac;
    double c0 = -u * (u - 1.0) * (u - 2.0) / 6.0;
    double c1 = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
    double c2 = -(u + 1.0) * u * (u - 2.0) / 2.0;
    double c3 = (u + 1.0) * u * (u - 1.0) / 6.0;
    return c0 * node(m - 1) + c1 * node(m) + c2 * node(m + 1) + c3 * node(m + 2);
}

TimeSignal trace_time(const Field& u, double x0, int j) {
    const GridSpec& g = u.grid;
    TimeSignal out = TimeSignal::zeros(g.nt, g.dt());
    std::vector<Complex> vals(g.nt);
    diag::parallel_for(g.nt, [&](std::size_t n) {
        SpaceSignal row(CVec(u.row(n).begin(), u.row(n).end()), g);
        SpaceSignal d = j == 0 ? row : spectral_derivative(row, j);
        vals[n] = interp_space(d.samples, g, x0);
    });
    out.samples.assign(vals.begin(), vals.end());
    out.causal = false;
    return out;
}

double l2_norm(const SpaceSignal& phi) {
    double s = 0.0;
    for (const auto& v : phi.samples) s += std::norm(v);
    return std::sqrt(s * phi.grid.dx());
}

}  // namespace bnls::prop
