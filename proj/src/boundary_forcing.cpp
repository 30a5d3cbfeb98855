#include "bnls/boundary_forcing.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "bnls/diag.hpp"
#include "bnls/errors.hpp"
#include "bnls/etd.hpp"
#include "bnls/fft.hpp"
#include "bnls/fractional_calculus.hpp"
#include "bnls/linear_propagator.hpp"
#include "bnls/special_functions.hpp"

namespace bnls::forcing {

namespace {

bool near_integer(double x, double& rounded) {
    rounded = std::round(x);
    return std::abs(x - rounded) < 1e-12;
}

void check_grid_signal(const TimeSignal& f, const GridSpec& g) {
    g.validate();
    f.validate();
    if (f.size() != g.nt || std::abs(f.dt - g.dt()) > 1e-12 * g.dt())
        throw config_error("forcing: boundary signal grid mismatch");
    if (!f.causal) throw config_error("forcing: boundary signal must be causal");
}

void resolution_check(const TimeSignal& h) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 1; i + 1 < h.size(); ++i) {
        num += std::norm(h.samples[i + 1] - 2.0 * h.samples[i] + h.samples[i - 1]);
        den += std::norm(h.samples[i]);
    }
    if (den > 0.0 && std::sqrt(num) > 0.4 * std::sqrt(den))
        diag::warn("forcing-resolution", "I_{-3/4} data has unresolved high-frequency content");
}

// out(t_n, x) assembled from per-mode coefficients c_k(t_n)
Field assemble_rows(const GridSpec& g, const CVec& coeffs /* nt x nx, mode-major rows */) {
    Field out(g);
    diag::parallel_for(g.nt, [&](std::size_t n) {
        CVec row(coeffs.begin() + n * g.nx, coeffs.begin() + (n + 1) * g.nx);
        fft::backward(row);
        auto dst = out.row(n);
        const double inv = 1.0 / static_cast<double>(g.nx);
        for (std::size_t m = 0; m < g.nx; ++m) dst[m] = row[m] * inv;
    });
    return out;
}

// exact-moment product weights for weight (sigma)^{mu} on the lag grid:
// integral over [l h, (l+1) h] of sigma^mu times the linear interpolant
// hat functions. A applies at the node sigma = l h, B at sigma = (l+1) h.
void power_weights(double mu, double h, std::size_t nlag, std::vector<double>& A,
                   std::vector<double>& B) {
    A.assign(nlag, 0.0);
    B.assign(nlag, 0.0);
    double p_prev = 0.0, q_prev = 0.0;
    for (std::size_t l = 0; l < nlag; ++l) {
        double s0 = h * static_cast<double>(l), s1 = h * static_cast<double>(l + 1);
        double p = std::pow(s1, mu + 1.0);
        double q = std::pow(s1, mu + 2.0);
        double P = (p - p_prev) / (mu + 1.0);       // int sigma^mu
        double Q = (q - q_prev) / (mu + 2.0);       // int sigma^{mu+1}
        A[l] = (s1 * P - Q) / h;                    // node at s0
        B[l] = (Q - s0 * P) / h;                    // node at s1
        p_prev = p;
        q_prev = q;
    }
}

Field spatial_derivative_field(const Field& u, int k) {
    Field out(u.grid);
    diag::parallel_for(u.grid.nt, [&](std::size_t n) {
        SpaceSignal row(CVec(u.row(n).begin(), u.row(n).end()), u.grid);
        SpaceSignal d = prop::spectral_derivative(row, k);
        auto dst = out.row(n);
        for (std::size_t m = 0; m < u.grid.nx; ++m) dst[m] = d.samples[m];
    });
    return out;
}

// (1/Gamma(mu+1) normalization left to callers) row-wise
// out(x_m) = sum over panels [y_j, y_{j+1}], j >= m, of (y-x)^{mu}-weighted
// linear interpolant of W.
Field tail_convolution(const Field& W, double mu) {
    const GridSpec& g = W.grid;
    std::vector<double> A, B;
    power_weights(mu, g.dx(), g.nx, A, B);
    Field out(g);
    diag::parallel_for(g.nt, [&](std::size_t n) {
        auto src = W.row(n);
        auto dst = out.row(n);
        for (std::size_t m = 0; m < g.nx; ++m) {
            Complex acc(0.0);
            for (std::size_t j = m; j + 1 < g.nx; ++j) {
                std::size_t l = j - m;
                acc += A[l] * src[j] + B[l] * src[j + 1];
            }
            dst[m] = acc;
        }
    });
    double tail = 0.0, peak = 0.0;
    for (std::size_t n = 0; n < g.nt; ++n) {
        auto src = W.row(n);
        for (std::size_t m = 0; m < g.nx; ++m) peak = std::max(peak, std::abs(src[m]));
        tail = std::max(tail, std::abs(src[g.nx - 1]));
    }
    if (peak > 0.0 && tail > 1e-8 * peak)
        diag::warn("forcing-y-truncation",
                   "kernel tail at the domain edge above 1e-8 of its peak");
    return out;
}

}  // namespace

ForcingOrder::ForcingOrder(double l) : lambda(l) {
    if (!(l > -4.0)) throw config_error("ForcingOrder: requires lambda > -4");
}

bool ForcingOrder::dirichlet_pole() const {
    return std::abs(std::sin((1.0 - lambda) * kPi / 4.0)) < 1e-12;
}

bool ForcingOrder::neumann_pole() const {
    return std::abs(std::sin((2.0 - lambda) * kPi / 4.0)) < 1e-12;
}

Field forcing_L0(const TimeSignal& f, const GridSpec& g) {
    check_grid_signal(f, g);
    const Complex M = sf::constant_M();
    TimeSignal h = frac::frac_derivative(f, -0.75);
    resolution_check(h);

    // mode-major phase integrals, then row transforms
    CVec coeffs(g.nt * g.nx);
    diag::parallel_for(g.nx, [&](std::size_t k) {
        double xi = g.freq(k);
        Complex m = -kI * (xi * xi * xi * xi);
        CVec I = etd::phase_history(m, g.dt(), h.samples);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;  // delta sits at x = 0, node nx/2
        Complex pref = M * sign / g.dx();
        for (std::size_t n = 0; n < g.nt; ++n) coeffs[n * g.nx + k] = pref * I[n];
    });
    return assemble_rows(g, coeffs);
}

Field forcing_L0_selfsimilar(const TimeSignal& f, const GridSpec& g,
                             const osc::KernelTable& table) {
    check_grid_signal(f, g);
    const Complex M = sf::constant_M();
    TimeSignal h = frac::frac_derivative(f, -0.75);
    const double dt = g.dt();

    double zmax = g.L / std::pow(dt, 0.25);
    if (zmax > table.x_max() + 1e-9)
        throw config_error("forcing_L0_selfsimilar: grid needs kernel values beyond the table");

    // product weights for the (t-t')^{-1/4} singular weight
    std::vector<double> A, B;
    power_weights(-0.25, dt, g.nt, A, B);
    const double w_frozen = (4.0 / 3.0) * std::pow(dt, 0.75);  // int_0^dt sigma^{-1/4}

    Field out(g);
    diag::parallel_for(g.nt, [&](std::size_t n) {
        if (n == 0) return;
        auto dst = out.row(n);
        for (std::size_t m = 0; m < g.nx; ++m) {
            double x = g.x(m);
            // G(sigma) = B(x sigma^{-1/4}) h(t_n - sigma) at sigma = l dt
            auto G = [&](std::size_t l) -> Complex {
                double sigma = dt * static_cast<double>(l);
                return table.eval(x / std::pow(sigma, 0.25)) * h.samples[n - l];
            };
            Complex acc = w_frozen * G(1);  // panel [0, dt], frozen at its first node
            for (std::size_t l = 1; l < n; ++l) acc += A[l] * G(l) + B[l] * G(l + 1);
            dst[m] = M * acc;
        }
    });
    return out;
}

Field forcing_Llambda(const TimeSignal& gsig, ForcingOrder order, const GridSpec& g) {
    check_grid_signal(gsig, g);
    const double lam = order.lambda;
    double k_int = 0.0;

    if (near_integer(lam, k_int) && k_int == 0.0) return forcing_L0(gsig, g);

    if (near_integer(lam, k_int) && (k_int == -1.0 || k_int == -2.0 || k_int == -3.0)) {
        int k = static_cast<int>(-k_int);
        TimeSignal shifted = frac::frac_integral(gsig, k / 4.0);
        Field base = forcing_L0(shifted, g);
        return spatial_derivative_field(base, k);
    }

    if (lam > 0.0) {
        TimeSignal shifted = frac::frac_derivative(gsig, -lam / 4.0);
        Field W = forcing_L0(shifted, g);
        Field conv = tail_convolution(W, lam - 1.0);
        conv *= 1.0 / sf::gamma(Complex(lam));
        return conv;
    }

    return forcing_Llambda_integrated(gsig, order, g);
}

Field forcing_Llambda_integrated(const TimeSignal& gsig, ForcingOrder order,
                                 const GridSpec& g) {
    check_grid_signal(gsig, g);
    const double lam = order.lambda;
    if (!(lam < 0.0)) throw config_error("forcing_Llambda_integrated: requires lambda < 0");

    TimeSignal gprime = frac::derivative(gsig);
    gprime.causal = gsig.causal;
    TimeSignal shifted = frac::frac_integral(gprime, -lam / 4.0);
    Field W = forcing_L0(shifted, g);
    Field conv = tail_convolution(W, lam + 3.0);
    const Complex gl4 = sf::gamma(Complex(lam + 4.0));
    conv *= kI / gl4;

    // boundary term -iM ((-x)_+^{lambda+3}/Gamma(lambda+4)) I_{-(3+lambda)/4} g(t)
    double alpha = -(3.0 + lam) / 4.0;
    TimeSignal q = alpha < 0.0   ? frac::frac_derivative(gsig, alpha)
                   : alpha > 0.0 ? frac::frac_integral(gsig, alpha)
                                 : gsig;
    const Complex M = sf::constant_M();
    for (std::size_t n = 0; n < g.nt; ++n) {
        auto dst = conv.row(n);
        for (std::size_t m = 0; m < g.nx; ++m) {
            double x = g.x(m);
            if (x < 0.0)
                dst[m] += -kI * M * std::pow(-x, lam + 3.0) / gl4 * q.samples[n];
        }
    }
    return conv;
}

Complex trace_value(ForcingOrder order) {
    const double lam = order.lambda;
    if (order.dirichlet_pole())
        throw pole_error("trace_value: sin((1-lambda)pi/4) vanishes at lambda = " +
                         std::to_string(lam));
    const Complex M = sf::constant_M();
    Complex num = std::exp(-kI * kPi * (1.0 + 3.0 * lam) / 8.0) +
                  std::exp(-kI * kPi * (1.0 - 5.0 * lam) / 8.0);
    return M / 8.0 * num / std::sin((1.0 - lam) * kPi / 4.0);
}

std::pair<Complex, Complex> one_sided_limits(const SpaceSignal& row) {
    const GridSpec& g = row.grid;
    const double dx = g.dx();
    const double a = std::max(4.0 * dx, 0.15);
    const double b = a + std::max(0.9, 24.0 * dx);
    if (b > 0.8 * g.L) throw config_error("one_sided_limits: domain too small");

    auto fit_side = [&](double sign) -> Complex {
        std::vector<double> xs;
        CVec vs;
        for (std::size_t m = 0; m < g.nx; ++m) {
            double x = g.x(m) * sign;
            if (x >= a && x <= b) {
                xs.push_back(g.x(m));
                vs.push_back(row.samples[m]);
            }
        }
        const int npts = static_cast<int>(xs.size());
        if (npts < 8) throw config_error("one_sided_limits: too few nodes in fit window");
        Eigen::MatrixXd V(npts, 4);
        Eigen::VectorXcd y(npts);
        for (int i = 0; i < npts; ++i) {
            double x = xs[i];
            V(i, 0) = 1.0;
            V(i, 1) = x;
            V(i, 2) = x * x;
            V(i, 3) = x * x * x;
            y(i) = vs[static_cast<std::size_t>(i)];
        }
        Eigen::MatrixXcd Vc = V.cast<Complex>();
        Eigen::VectorXcd coef = (Vc.adjoint() * Vc).ldlt().solve(Vc.adjoint() * y);
        Eigen::VectorXcd resid = Vc * coef - y;
        double rel = resid.norm() / std::max(y.norm(), 1e-300);
        if (rel > 0.2)
            diag::warn("jump-extrapolation", "one-sided polynomial fit residual large");
        return coef(0);
    };
    return {fit_side(-1.0), fit_side(+1.0)};
}

std::pair<Complex, Complex> third_derivative_jump(const TimeSignal& f, double t,
                                                  const GridSpec& g) {
    check_grid_signal(f, g);
    if (!(t > 0.0 && t <= g.T)) throw config_error("third_derivative_jump: t outside (0, T]");
    Field L0 = forcing_L0(f, g);
    auto n = static_cast<std::size_t>(std::llround(t / g.dt()));
    n = std::min(n, g.nt - 1);
    SpaceSignal row(CVec(L0.row(n).begin(), L0.row(n).end()), g);
    SpaceSignal d3 = prop::spectral_derivative(row, 3);
    return one_sided_limits(d3);
}

}  // namespace bnls::forcing
