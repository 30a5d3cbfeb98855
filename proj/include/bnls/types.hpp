#pragma once

#include <complex>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bnls {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Guard against NaN/Inf escaping a numerical kernel.
inline Complex require_finite(Complex z, const char* what) {
    if (!is_finite(z)) throw std::runtime_error(std::string("non-finite value in ") + what);
    return z;
}

}  // namespace bnls
