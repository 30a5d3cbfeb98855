#include "bnls/oscillatory_kernel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include "bnls/diag.hpp"
#include "bnls/errors.hpp"
#include "bnls/special_functions.hpp"

namespace bnls::osc {

namespace {

const Complex kW = std::exp(-kI * kPi / 8.0);  // rotation e^{-i pi/8}

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      double rel_tol) {
    double err = 0.0, l1 = 0.0;
    double v = GK::integrate(f, a, b, 15, rel_tol, &err, &l1);
    if (err > 10.0 * rel_tol * std::max(l1, 1e-30) + 1e-300)
        throw quadrature_error("adaptive quadrature did not reach tolerance");
    return v;
}

}  // namespace

Complex integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                          double tol) {
    double re = integrate_real([&](double x) { return f(x).real(); }, a, b, tol);
    double im = integrate_real([&](double x) { return f(x).imag(); }, a, b, tol);
    return {re, im};
}

Complex kernel_B1(Complex z, double tol) {
    // |integrand| = exp(a r - r^4), a = -Im(z W); interior maximum at
    // r* = (a/4)^{1/3} measures the cancellation this evaluation must absorb.
    const double a = -std::imag(z * kW);
    double peak = 0.0;
    if (a > 0.0) {
        double rstar = std::cbrt(a / 4.0);
        peak = a * rstar - std::pow(rstar, 4);
        if (std::exp(peak) * 5e-16 > tol)
            throw quadrature_error(
                "kernel_B1: argument too large for rotated-contour evaluation at this tol");
    }
    double rmax = std::cbrt(std::max(a, 0.0) + 60.0) + 3.0;
    double l1_bound = 2.0 * rmax * std::exp(peak);
    double rel = std::clamp(tol / l1_bound, 1e-15, 1e-4);
    Complex v = integrate_complex(
        [&](double r) { return std::exp(kI * z * r * kW - std::pow(r, 4)); }, 0.0, rmax, rel);
    return kW / (2.0 * kPi) * v;
}

Complex kernel_B(double x, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("kernel_B: tol must be positive");
    return kernel_B1(Complex(x, 0.0), tol / 2.0) + kernel_B1(Complex(-x, 0.0), tol / 2.0);
}

// ---------------------------------------------------------------------------
// real-axis route: after eta = xi^4,
//   B1_eps(x) = (1/8pi) int_0^inf eta^{-3/4} e^{(ix-eps) eta^{1/4}} e^{-i eta} d eta.
// [0,1] reverts to the xi variable (smooth); on [1,H] the e^{-i eta}
// oscillation is integrated exactly against piecewise-linear amplitude.

namespace {

void phase_moments(double a, double b, Complex& m0, Complex& m1) {
    const Complex ea = std::exp(-kI * a);
    const Complex ed = std::exp(-kI * (b - a));
    m0 = kI * ea * (ed - 1.0);
    m1 = ea * (ed * (kI * b + 1.0) - (kI * a + 1.0));
}

Complex filon_panel(const std::function<Complex(double)>& g, double a, double b) {
    Complex m0, m1;
    phase_moments(a, b, m0, m1);
    const Complex ga = g(a), gb = g(b);
    const Complex slope = (gb - ga) / (b - a);
    return (ga - slope * a) * m0 + slope * m1;
}

Complex filon_adaptive(const std::function<Complex(double)>& g, double a, double b, double tol,
                       int depth) {
    Complex whole = filon_panel(g, a, b);
    double mid = 0.5 * (a + b);
    Complex split = filon_panel(g, a, mid) + filon_panel(g, mid, b);
    if (std::abs(whole - split) < tol || depth >= 30) return split;
    return filon_adaptive(g, a, mid, tol / 2.0, depth + 1) +
           filon_adaptive(g, mid, b, tol / 2.0, depth + 1);
}

}  // namespace

Complex kernel_B_realaxis(double x, double eps, double tol) {
    if (!(eps > 0.0)) throw std::domain_error("kernel_B_realaxis: eps must be positive");
    auto half = [&](double sign) -> Complex {
        const Complex c = Complex(-eps, sign * x);  // (i sign x - eps)
        Complex head = integrate_complex(
            [&](double xi) { return std::exp(c * xi - kI * std::pow(xi, 4)); }, 0.0, 1.0,
            tol / 4.0);
        double H = std::pow(42.0 / eps, 4);
        auto amp = [&](double eta) {
            return std::exp(c * std::pow(eta, 0.25)) * std::pow(eta, -0.75);
        };
        Complex tail(0.0);
        double a = 1.0;
        while (a < H) {
            double b = std::min(a * 1.6, H);
            tail += filon_adaptive(amp, a, b, tol / 64.0, 0);
            a = b;
        }
        return head + tail / 4.0;
    };
    return (half(+1.0) + half(-1.0)) / (2.0 * kPi);
}

Complex kernel_B_realaxis_extrapolated(double x, double tol) {
    constexpr int n = 4;
    double eps[n] = {0.08, 0.04, 0.02, 0.01};
    Complex tab[n];
    for (int i = 0; i < n; ++i) tab[i] = kernel_B_realaxis(x, eps[i], tol / 10.0);
    for (int level = 1; level < n; ++level)
        for (int i = 0; i < n - level; ++i)
            tab[i] = (eps[i] * tab[i + 1] - eps[i + level] * tab[i]) / (eps[i] - eps[i + level]);
    return tab[0];
}

// ---------------------------------------------------------------------------

void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes,
                  std::vector<double>& weights) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    const double ab = a + b;
    for (int k = 0; k < n; ++k) {
        double dk;
        if (k == 0)
            dk = (b - a) / (ab + 2.0);
        else
            dk = (b * b - a * a) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
        J(k, k) = dk;
        if (k > 0) {
            double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
            double den = std::pow(2.0 * k + ab, 2) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0);
            double ek = std::sqrt(num / den);
            J(k, k - 1) = ek;
            J(k - 1, k) = ek;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::pow(2.0, ab + 1.0) * sf::gamma(a + 1.0) * sf::gamma(b + 1.0) /
                       sf::gamma(ab + 2.0);
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        weights[i] = mu0 * v0 * v0;
    }
}

MellinCheck mellin_check(double lambda, double tol) {
    if (!(lambda > 0.0 && lambda < 3.0 / 8.0))
        throw std::domain_error("mellin_check: lambda must lie in (0, 3/8)");

    const double X = 8.0;
    const double qtol = std::min(tol * 0.05, 1e-9);

    // head [0,1]: Gauss-Jacobi with weight x^{lambda-1}
    std::vector<double> t, w;
    gauss_jacobi(48, 0.0, lambda - 1.0, t, w);
    Complex head1(0.0);
    for (std::size_t i = 0; i < t.size(); ++i)
        head1 += w[i] * kernel_B(0.5 * (1.0 + t[i]), qtol);
    head1 *= std::pow(2.0, -lambda);

    Complex head2 = integrate_complex(
        [&](double x) { return std::pow(x, lambda - 1.0) * kernel_B(x, qtol); }, 1.0, X, qtol);

    // rotated tails; the O(1/z) endpoint parts of B1 are subtracted (their
    // closed-form integrals cancel between the upper and lower rotations),
    // leaving integrands decaying like s^{lambda-6}
    const double S = 80.0;
    auto up = [&](double s) -> Complex {
        Complex z(X, s);
        return std::pow(z, lambda - 1.0) * (kernel_B1(z, qtol) - kI / (2.0 * kPi * z));
    };
    auto down = [&](double s) -> Complex {
        Complex z(X, -s);
        return std::pow(z, lambda - 1.0) * (kernel_B1(-z, qtol) + kI / (2.0 * kPi * z));
    };
    Complex t1 = kI * integrate_complex(up, 0.0, S, qtol);
    Complex t2 = -kI * integrate_complex(down, 0.0, S, qtol);

    double tail_est = (std::abs(up(S)) + std::abs(down(S))) * S / (5.0 - lambda) + 4.0 * qtol;
    if (tail_est > tol)
        throw quadrature_error("mellin_check: tail truncation estimate exceeds tolerance");

    MellinCheck out;
    out.lhs = head1 + head2 + t1 + t2;
    out.tail_estimate = tail_est;
    out.rhs = sf::gamma(Complex(lambda)) * sf::gamma(Complex(0.25 - lambda / 4.0)) /
              (8.0 * kPi) *
              (std::exp(-kI * kPi * (1.0 + 3.0 * lambda) / 8.0) +
               std::exp(-kI * kPi * (1.0 - 5.0 * lambda) / 8.0));
    return out;
}

// ---------------------------------------------------------------------------

KernelTable KernelTable::build(double x_max, double dx, double quad_tol) {
    if (!(x_max > 0.0 && dx > 0.0)) throw config_error("KernelTable: bad extents");
    KernelTable tab;
    tab.dx_ = dx;
    tab.quad_tol_ = quad_tol;
    auto n = static_cast<std::size_t>(std::ceil(x_max / dx)) + 1;
    tab.xs_.resize(n);
    tab.values_.resize(n);
    for (std::size_t i = 0; i < n; ++i) tab.xs_[i] = dx * static_cast<double>(i);
    diag::parallel_for(n, [&](std::size_t i) { tab.values_[i] = kernel_B(tab.xs_[i], quad_tol); });
    return tab;
}

Complex KernelTable::eval(double x) const {
    if (xs_.empty()) throw config_error("KernelTable: empty");
    double ax = std::abs(x);  // B even
    if (ax > xs_.back() + 1e-12) throw config_error("KernelTable: argument beyond table range");
    ax = std::min(ax, xs_.back());
    double pos = ax / dx_;
    auto m = static_cast<std::ptrdiff_t>(std::floor(pos));
    auto last = static_cast<std::ptrdiff_t>(xs_.size()) - 1;
    double u = pos - static_cast<double>(m);
    if (u < 1e-13) return values_[static_cast<std::size_t>(m)];

    auto node = [&](std::ptrdiff_t i) -> Complex {
        if (i < 0) i = -i;  // evenness across x = 0
        if (i > last) i = last;
        return values_[static_cast<std::size_t>(i)];
    };
    double c0 = -u * (u - 1.0) * (u - 2.0) / 6.0;
    double c1 = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
    double c2 = -(u + 1.0) * u * (u - 2.0) / 2.0;
    double c3 = (u + 1.0) * u * (u - 1.0) / 6.0;
    return c0 * node(m - 1) + c1 * node(m) + c2 * node(m + 1) + c3 * node(m + 2);
}

void KernelTable::dump_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("KernelTable: cannot open " + path);
    out << "x,re,im\n";
    char buf[96];
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", xs_[i], values_[i].real(),
                      values_[i].imag());
        out << buf;
    }
}

}  // namespace bnls::osc
