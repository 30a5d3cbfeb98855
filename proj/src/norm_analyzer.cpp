#include "bnls/norm_analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bnls/boundary_forcing.hpp"
#include "bnls/diag.hpp"
#include "bnls/errors.hpp"
#include "bnls/fft.hpp"
#include "bnls/fractional_calculus.hpp"
#include "bnls/linear_propagator.hpp"

namespace bnls::norms {

namespace {

double time_freq(std::size_t j, std::size_t nt, double dt) {
    auto jj = static_cast<std::ptrdiff_t>(j);
    if (jj > static_cast<std::ptrdiff_t>((nt - 1) / 2)) jj -= static_cast<std::ptrdiff_t>(nt);
    return 2.0 * kPi * static_cast<double>(jj) / (static_cast<double>(nt) * dt);
}

}  // namespace

double hs_norm(const SpaceSignal& phi, double s) {
    const GridSpec& g = phi.grid;
    CVec hat = phi.samples;
    fft::forward(hat);
    const double dxi = kPi / g.L;
    const double scale = g.dx() * g.dx() / (2.0 * kPi);
    double acc = 0.0;
    for (std::size_t k = 0; k < g.nx; ++k) {
        double xi = g.freq(k);
        acc += std::pow(1.0 + xi * xi, s) * std::norm(hat[k]) * scale * dxi;
    }
    return std::sqrt(acc);
}

double hs_halfline_norm(const HalfLineSignal& phi, double s) {
    if (!(s >= 0.0 && s < 0.5))
        throw std::domain_error("hs_halfline_norm: zero extension requires 0 <= s < 1/2");
    const std::size_t n = phi.size();
    if (n < 8 || (n & (n - 1)) != 0)
        throw config_error("hs_halfline_norm: need a power-of-two half-line sample count");
    GridSpec g;
    g.L = phi.dx * static_cast<double>(n);
    g.nx = 2 * n;
    g.T = 1.0;
    g.nt = 2;
    SpaceSignal full = SpaceSignal::zeros(g);
    for (std::size_t j = 0; j < n; ++j) full.samples[n + j] = phi.samples[j];
    return hs_norm(full, s);
}

double ht_norm(const TimeSignal& f, double sigma) {
    const std::size_t nt = f.size();
    CVec hat = f.samples;
    fft::forward(hat);
    const double span = static_cast<double>(nt) * f.dt;
    const double dtau = 2.0 * kPi / span;
    const double scale = f.dt * f.dt / (2.0 * kPi);
    double acc = 0.0;
    for (std::size_t j = 0; j < nt; ++j) {
        double tau = time_freq(j, nt, f.dt);
        acc += std::pow(1.0 + tau * tau, sigma) * std::norm(hat[j]) * scale * dtau;
    }
    return std::sqrt(acc);
}

Field apply_time_cutoff(const Field& u) {
    Field out = u;
    for (std::size_t n = 0; n < u.grid.nt; ++n) {
        double psi = frac::cutoff_psi(u.grid.t(n));
        auto row = out.row(n);
        for (auto& v : row) v *= psi;
    }
    return out;
}

double xsb_norm(const Field& u, SobolevIndex idx) {
    const GridSpec& g = u.grid;
    CVec hat = u.data;
    fft::forward_2d(hat, g.nt, g.nx);

    double top = 0.0, total = 0.0;
    const double tau_max = kPi / g.dt();
    const double dxi = kPi / g.L;
    const double dtau = 2.0 * kPi / (static_cast<double>(g.nt) * g.dt());
    const double scale = std::pow(g.dx() * g.dt() / (2.0 * kPi), 2);
    double acc = 0.0;
    for (std::size_t j = 0; j < g.nt; ++j) {
        double tau = time_freq(j, g.nt, g.dt());
        bool hi = std::abs(tau) > (2.0 / 3.0) * tau_max;
        for (std::size_t k = 0; k < g.nx; ++k) {
            double e = std::norm(hat[j * g.nx + k]);
            total += e;
            if (hi) top += e;
            double xi = g.freq(k);
            double xi4 = xi * xi * xi * xi;
            double w = std::pow(1.0 + xi * xi, idx.s) *
                       std::pow(1.0 + (tau + xi4) * (tau + xi4), idx.b);
            acc += w * e * scale * dtau * dxi;
        }
    }
    if (total > 0.0 && top > 1e-4 * total)
        diag::warn("xsb-temporal-resolution", "temporal spectrum energy in top third above 1e-4");
    return std::sqrt(acc);
}

namespace {

double sup_rows_hs(const Field& u, double s) {
    const GridSpec& g = u.grid;
    std::vector<double> norms(g.nt);
    diag::parallel_for(g.nt, [&](std::size_t n) {
        SpaceSignal row(CVec(u.row(n).begin(), u.row(n).end()), g);
        norms[n] = hs_norm(row, s);
    });
    return *std::max_element(norms.begin(), norms.end());
}

// sup over grid columns of the time-Sobolev norm of dx^j u(., x_m)
double sup_cols_ht(const Field& u, int j, double sigma) {
    const GridSpec& g = u.grid;
    Field d(g);
    diag::parallel_for(g.nt, [&](std::size_t n) {
        SpaceSignal row(CVec(u.row(n).begin(), u.row(n).end()), g);
        SpaceSignal der = (j == 0) ? row : prop::spectral_derivative(row, j);
        auto dst = d.row(n);
        std::copy(der.samples.begin(), der.samples.end(), dst.begin());
    });
    std::vector<double> colnorm(g.nx, 0.0);
    diag::parallel_for(g.nx, [&](std::size_t m) {
        TimeSignal col = TimeSignal::zeros(g.nt, g.dt());
        for (std::size_t n = 0; n < g.nt; ++n) col.samples[n] = d.at(n, m);
        col.causal = false;
        colnorm[m] = ht_norm(col, sigma);
    });
    return *std::max_element(colnorm.begin(), colnorm.end());
}

}  // namespace

double zsb_norm(const Field& u, SobolevIndex idx) {
    Field loc = apply_time_cutoff(u);
    double sup_hs = sup_rows_hs(u, idx.s);
    double traces = 0.0;
    for (int j = 0; j <= 1; ++j)
        traces += sup_cols_ht(loc, j, (2.0 * idx.s + 3.0 - 2.0 * j) / 8.0);
    return sup_hs + traces + xsb_norm(loc, idx);
}

// ---------------------------------------------------------------------------

RatioKind ratio_kind_from_string(const std::string& name) {
    for (RatioKind k : all_ratio_kinds())
        if (to_string(k) == name) return k;
    throw config_error("unknown ratio kind: " + name);
}

std::string to_string(RatioKind kind) {
    switch (kind) {
        case RatioKind::group_space: return "group_space";
        case RatioKind::group_trace_j0: return "group_trace_j0";
        case RatioKind::group_trace_j1: return "group_trace_j1";
        case RatioKind::group_xsb: return "group_xsb";
        case RatioKind::duhamel_space: return "duhamel_space";
        case RatioKind::duhamel_trace: return "duhamel_trace";
        case RatioKind::duhamel_xsb: return "duhamel_xsb";
        case RatioKind::forcing_space: return "forcing_space";
        case RatioKind::forcing_trace: return "forcing_trace";
        case RatioKind::forcing_xsb: return "forcing_xsb";
        case RatioKind::trilinear: return "trilinear";
    }
    return "?";
}

std::vector<RatioKind> all_ratio_kinds() {
    return {RatioKind::group_space,   RatioKind::group_trace_j0, RatioKind::group_trace_j1,
            RatioKind::group_xsb,     RatioKind::duhamel_space,  RatioKind::duhamel_trace,
            RatioKind::duhamel_xsb,   RatioKind::forcing_space,  RatioKind::forcing_trace,
            RatioKind::forcing_xsb,   RatioKind::trilinear};
}

namespace {

struct SampleSet {
    GridSpec grid;
    std::mt19937_64 rng;

    SampleSet(const GridSpec& g, unsigned long long seed) : grid(g), rng(seed) {}

    Complex gauss() {
        std::normal_distribution<double> n01(0.0, 1.0);
        double re = n01(rng), im = n01(rng);
        return {re, im};
    }

    // band-limited random space signal, spectral cutoff at half-Nyquist
    SpaceSignal random_space() {
        CVec hat(grid.nx, Complex(0.0));
        double cut = grid.freq_max() / 2.0;
        for (std::size_t k = 0; k < grid.nx; ++k)
            if (std::abs(grid.freq(k)) <= cut) hat[k] = gauss();
        fft::backward(hat);
        SpaceSignal out(std::move(hat), grid);
        double inv = 1.0 / std::sqrt(static_cast<double>(grid.nx));
        for (auto& v : out.samples) v *= inv;
        return out;
    }

    // psi-localized band-limited space-time field
    Field random_field() {
        CVec hat(grid.nt * grid.nx, Complex(0.0));
        double cutx = grid.freq_max() / 2.0;
        double cutt = kPi / grid.dt() / 2.0;
        for (std::size_t j = 0; j < grid.nt; ++j) {
            double tau = time_freq(j, grid.nt, grid.dt());
            if (std::abs(tau) > cutt) continue;
            for (std::size_t k = 0; k < grid.nx; ++k)
                if (std::abs(grid.freq(k)) <= cutx) hat[j * grid.nx + k] = gauss();
        }
        fft::backward_2d(hat, grid.nt, grid.nx);
        Field out(grid);
        double inv = 1.0 / std::sqrt(static_cast<double>(grid.nt * grid.nx));
        for (std::size_t i = 0; i < hat.size(); ++i) out.data[i] = hat[i] * inv;
        return apply_time_cutoff(out);
    }

    // causal band-limited boundary signal supported well inside [0, T]
    TimeSignal random_causal_time() {
        CVec hat(grid.nt, Complex(0.0));
        double cutt = kPi / grid.dt() / 2.0;
        for (std::size_t j = 0; j < grid.nt; ++j)
            if (std::abs(time_freq(j, grid.nt, grid.dt())) <= cutt) hat[j] = gauss();
        fft::backward(hat);
        TimeSignal out = TimeSignal::zeros(grid.nt, grid.dt());
        double inv = 1.0 / std::sqrt(static_cast<double>(grid.nt));
        for (std::size_t n = 0; n < grid.nt; ++n) {
            double t = grid.t(n);
            double ramp = 1.0 - std::exp(-(t * t) / 0.09);
            out.samples[n] = hat[n] * inv * ramp * frac::cutoff_psi(t);
        }
        return out;
    }
};

double ratio_for(RatioKind kind, SampleSet& S, SobolevIndex idx) {
    const GridSpec& g = S.grid;
    const SobolevIndex neg{idx.s, -idx.b};
    switch (kind) {
        case RatioKind::group_space:
        case RatioKind::group_trace_j0:
        case RatioKind::group_trace_j1:
        case RatioKind::group_xsb: {
            SpaceSignal phi = S.random_space();
            double den = hs_norm(phi, idx.s);
            if (den == 0.0) return 0.0;
            Field G = apply_time_cutoff(prop::group_field(phi, g));
            if (kind == RatioKind::group_xsb) return xsb_norm(G, idx) / den;
            if (kind == RatioKind::group_space) return sup_rows_hs(G, idx.s) / den;
            int j = (kind == RatioKind::group_trace_j1) ? 1 : 0;
            return sup_cols_ht(G, j, (2.0 * idx.s + 3.0 - 2.0 * j) / 8.0) / den;
        }
        case RatioKind::duhamel_space:
        case RatioKind::duhamel_trace:
        case RatioKind::duhamel_xsb: {
            Field w = S.random_field();
            double den = xsb_norm(w, neg);
            if (den == 0.0) return 0.0;
            Field D = apply_time_cutoff(prop::duhamel_D(w));
            if (kind == RatioKind::duhamel_xsb) return xsb_norm(D, idx) / den;
            if (kind == RatioKind::duhamel_space) return sup_rows_hs(D, idx.s) / den;
            return sup_cols_ht(D, 0, (2.0 * idx.s + 3.0) / 8.0) / den;
        }
        case RatioKind::forcing_space:
        case RatioKind::forcing_trace:
        case RatioKind::forcing_xsb: {
            TimeSignal f = S.random_causal_time();
            double den = ht_norm(f, (2.0 * idx.s + 3.0) / 8.0);
            if (den == 0.0) return 0.0;
            Field L = apply_time_cutoff(
                forcing::forcing_Llambda(f, forcing::ForcingOrder(1.0 / 3.0), g));
            if (kind == RatioKind::forcing_xsb) return xsb_norm(L, idx) / den;
            if (kind == RatioKind::forcing_space) return sup_rows_hs(L, idx.s) / den;
            return sup_cols_ht(L, 0, (2.0 * idx.s + 3.0) / 8.0) / den;
        }
        case RatioKind::trilinear: {
            Field u1 = S.random_field(), u2 = S.random_field(), u3 = S.random_field();
            double den = xsb_norm(u1, idx) * xsb_norm(u2, idx) * xsb_norm(u3, idx);
            if (den == 0.0) return 0.0;
            Field prod(g);
            for (std::size_t i = 0; i < prod.data.size(); ++i)
                prod.data[i] = u1.data[i] * u2.data[i] * std::conj(u3.data[i]);
            return xsb_norm(prod, neg) / den;
        }
    }
    return 0.0;
}

void run_ensemble(RatioKind kind, const GridSpec& g, std::size_t n, SobolevIndex idx,
                  unsigned long long seed, double& maxr, double& medr) {
    std::vector<double> ratios(n);
    for (std::size_t i = 0; i < n; ++i) {
        SampleSet S(g, seed + 1000003ULL * (i + 1));
        ratios[i] = ratio_for(kind, S, idx);
    }
    std::sort(ratios.begin(), ratios.end());
    maxr = ratios.back();
    medr = ratios[ratios.size() / 2];
}

}  // namespace

RatioReport estimate_ratio_suite(RatioKind kind, std::size_t ensemble_size, SobolevIndex idx,
                                 unsigned long long seed) {
    if (ensemble_size == 0) throw config_error("estimate_ratio_suite: empty ensemble");
    // the random band doubles with nx; nt tracks the quartic dispersion of
    // the band so the resonance curve tau = -xi^4 stays resolved
    GridSpec coarse{16.0, 64, 4.0, 257};
    GridSpec fine{16.0, 128, 4.0, 4097};

    RatioReport rep;
    rep.kind = kind;
    rep.idx = idx;
    rep.ensemble = ensemble_size;
    run_ensemble(kind, coarse, ensemble_size, idx, seed, rep.max_coarse, rep.median_coarse);
    run_ensemble(kind, fine, ensemble_size, idx, seed, rep.max_fine, rep.median_fine);
    rep.growth = rep.max_coarse > 0.0 ? rep.max_fine / rep.max_coarse : 0.0;
    return rep;
}

}  // namespace bnls::norms
