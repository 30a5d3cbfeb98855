#include "bnls/fractional_calculus.hpp"

#include <cmath>
#include <limits>

#include "bnls/diag.hpp"
#include "bnls/errors.hpp"
#include "bnls/special_functions.hpp"

namespace bnls::frac {

namespace {

void require_causal_grid(const TimeSignal& f) {
    f.validate();
    if (!f.causal) throw config_error("fractional op: signal must be causal");
    if (std::abs(f.t0) > 1e-12 * f.dt)
        throw config_error("fractional op: causal signal must start at t = 0");
}

}  // namespace

TimeSignal frac_integral(const TimeSignal& f, double alpha) {
    if (!(alpha > 0.0))
        throw std::domain_error("frac_integral: alpha must be positive (use frac_derivative)");
    require_causal_grid(f);

    const std::size_t n = f.size();
    const double h = f.dt;
    const double ga = sf::gamma(alpha);

    // Per-lag weights: on [t_{j}, t_{j+1}] with sigma = t_n - s in
    // [(l-1)h, lh], l = n - j:
    //   int sigma^{alpha-1} (linear f) ds
    //     = A_l f_j + B_l f_{j+1},
    //   A_l = (Q_l - (l-1)h P_l)/h,  B_l = (lh P_l - Q_l)/h,
    //   P_l = ((lh)^a - ((l-1)h)^a)/a,  Q_l analogous with a+1.
    std::vector<double> A(n), B(n);
    double pow_a_prev = 0.0, pow_a1_prev = 0.0;
    for (std::size_t l = 1; l < n; ++l) {
        double s1 = double(l) * h, s0 = double(l - 1) * h;
        double pow_a = std::pow(s1, alpha);
        double pow_a1 = std::pow(s1, alpha + 1.0);
        double P = (pow_a - pow_a_prev) / alpha;
        double Q = (pow_a1 - pow_a1_prev) / (alpha + 1.0);
        A[l] = (Q - s0 * P) / h;
        B[l] = (s1 * P - Q) / h;
        pow_a_prev = pow_a;
        pow_a1_prev = pow_a1;
    }

    TimeSignal out = TimeSignal::zeros(n, h);
    for (std::size_t m = 1; m < n; ++m) {
        Complex acc(0.0);
        for (std::size_t l = 1; l <= m; ++l)
            acc += A[l] * f.samples[m - l] + B[l] * f.samples[m - l + 1];
        out.samples[m] = acc / ga;
    }
    return out;
}

TimeSignal derivative(const TimeSignal& f) {
    const std::size_t n = f.size();
    if (n < 3) throw config_error("derivative: need at least 3 samples");
    const double h = f.dt;
    TimeSignal out = f;
    out.samples[0] = (-3.0 * f.samples[0] + 4.0 * f.samples[1] - f.samples[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i)
        out.samples[i] = (f.samples[i + 1] - f.samples[i - 1]) / (2.0 * h);
    out.samples[n - 1] =
        (3.0 * f.samples[n - 1] - 4.0 * f.samples[n - 2] + f.samples[n - 3]) / (2.0 * h);
    out.causal = f.causal;
    return out;
}

int default_diff_order(double alpha) {
    // smallest k with alpha + k in (1/2, 3/2]
    int k = static_cast<int>(std::ceil(0.5 - alpha));
    if (alpha + k <= 0.5) ++k;
    return k;
}

TimeSignal frac_derivative(const TimeSignal& f, double alpha, int k) {
    if (alpha > 0.0) throw std::domain_error("frac_derivative: alpha must be <= 0");
    if (alpha == 0.0) return f;
    if (k <= 0 || alpha + k <= 0.0)
        throw std::domain_error("frac_derivative: need positive k with alpha + k > 0");
    require_causal_grid(f);

    TimeSignal g = frac_integral(f, alpha + k);
    double scale_in = sup_abs(g);
    for (int j = 0; j < k; ++j) g = derivative(g);
    g.causal = f.causal;

    double noise = std::numeric_limits<double>::epsilon() * scale_in / std::pow(f.dt, k);
    if (noise > 1e-8 * (sup_abs(g) + 1e-300))
        diag::warn("frac-derivative-amplification",
                   "dt too coarse for requested differentiation order");
    return g;
}

TimeSignal frac_derivative(const TimeSignal& f, double alpha) {
    if (alpha == 0.0) return f;
    return frac_derivative(f, alpha, default_diff_order(alpha));
}

namespace {
double ramp(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
double smoothstep(double u) {
    double a = ramp(u), b = ramp(1.0 - u);
    return a / (a + b);
}
}  // namespace

double cutoff_psi(double t) {
    if (t <= -2.0 || t >= 2.0) return 0.0;
    if (t >= 0.0 && t <= 1.0) return 1.0;
    if (t < 0.0) return smoothstep((t + 2.0) / 2.0);
    return smoothstep(2.0 - t);
}

}  // namespace bnls::frac
