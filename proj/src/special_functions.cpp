#include "bnls/special_functions.hpp"

#include <array>
#include <cmath>

#include "bnls/errors.hpp"

namespace bnls::sf {

namespace {

// Lanczos g = 7, 9 terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosC = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool at_pole(Complex z) {
    if (z.imag() != 0.0) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-13;
}

Complex lanczos_positive(Complex z) {
    // valid for Re z > 0.5
    z -= 1.0;
    Complex x = kLanczosC[0];
    for (std::size_t i = 1; i < kLanczosC.size(); ++i) x += kLanczosC[i] / (z + double(i));
    Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

Complex gamma(Complex z) {
    if (at_pole(z)) throw pole_error("gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * lanczos_positive(1.0 - z));
    }
    return lanczos_positive(z);
}

double gamma(double x) { return gamma(Complex(x, 0.0)).real(); }

Complex log_gamma(Complex z) {
    if (z.real() <= 0.0) throw pole_error("log_gamma: requires Re z > 0");
    Complex w = z - 1.0;
    Complex x = kLanczosC[0];
    for (std::size_t i = 1; i < kLanczosC.size(); ++i) x += kLanczosC[i] / (w + double(i));
    Complex t = w + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t + std::log(x);
}

Complex power_tau_minus_i0(double tau, Complex alpha) {
    if (tau == 0.0) throw std::domain_error("power_tau_minus_i0: tau = 0");
    if (alpha == Complex(0.0, 0.0)) return 1.0;
    Complex mag = std::exp(-alpha * std::log(std::abs(tau)));
    if (tau > 0.0) return mag;
    return std::exp(alpha * kPi * kI) * mag;
}

Complex constant_B0() {
    Complex i74 = std::exp(kI * (7.0 * kPi / 8.0));
    return -(i74 / kPi) * gamma(Complex(1.25, 0.0));
}

Complex constant_M() { return 1.0 / (constant_B0() * gamma(Complex(0.75, 0.0))); }

}  // namespace bnls::sf
