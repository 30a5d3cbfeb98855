#pragma once

#include "bnls/types.hpp"

namespace bnls::etd {

// phi1(z) = (e^z - 1)/z,  psi2(z) = (z e^z - e^z + 1)/z^2.
// Series branch near z = 0 avoids cancellation; on the imaginary axis
// (z = -i theta h) both are O(1).
inline Complex phi1(Complex z) {
    if (std::abs(z) < 0.5) {
        Complex term(1.0), sum(1.0);
        for (int k = 1; k < 16; ++k) {
            term *= z / static_cast<double>(k + 1);
            sum += term;
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }
    return (std::exp(z) - 1.0) / z;
}

inline Complex psi2(Complex z) {
    if (std::abs(z) < 0.5) {
        // sum_{j>=0} z^j (j+1)/(j+2)!
        Complex sum(0.5), zj(1.0);
        double fact = 2.0;  // (j+2)! running
        for (int jj = 1; jj < 18; ++jj) {
            zj *= z;
            fact *= static_cast<double>(jj + 2);
            Complex term = zj * (static_cast<double>(jj + 1) / fact);
            sum += term;
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }
    Complex ez = std::exp(z);
    return (z * ez - ez + 1.0) / (z * z);
}

// I(t_n) = int_0^{t_n} e^{m (t_n - t')} g(t') dt' for all n, with g
// piecewise linear on the uniform grid (phase factor integrated exactly
// per subinterval). Exact in the trapezoid limit m -> 0.
inline CVec phase_history(Complex m, double h, const CVec& g) {
    const std::size_t n = g.size();
    CVec out(n, Complex(0.0));
    if (n < 2) return out;
    const Complex z = m * h;
    const Complex ez = std::exp(z);
    const Complex wl = h * psi2(z);             // weight of left node g_n
    const Complex wr = h * (phi1(z) - psi2(z)); // weight of right node g_{n+1}
    for (std::size_t k = 0; k + 1 < n; ++k)
        out[k + 1] = ez * out[k] + wl * g[k] + wr * g[k + 1];
    return out;
}

// Same integral evaluated independently per output time (quadratic cost);
// kept as the slow reference path.
inline CVec phase_history_naive(Complex m, double h, const CVec& g) {
    const std::size_t n = g.size();
    CVec out(n, Complex(0.0));
    const Complex z = m * h;
    const Complex wl = h * psi2(z);
    const Complex wr = h * (phi1(z) - psi2(z));
    for (std::size_t k = 1; k < n; ++k) {
        Complex acc(0.0);
        for (std::size_t j = 0; j < k; ++j) {
            Complex decay = std::exp(m * h * static_cast<double>(k - 1 - j));
            acc += decay * (wl * g[j] + wr * g[j + 1]);
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace bnls::etd
