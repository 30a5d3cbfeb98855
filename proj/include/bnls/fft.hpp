#pragma once

#include <cstddef>

#include "bnls/types.hpp"

namespace bnls::fft {

// Thin FFTW wrapper, plan-cached per size. forward: X_k = sum_m x_m e^{-2pi i km/n};
// backward is the unnormalized inverse (divide by n to invert).
void forward(Complex* data, std::size_t n);
void backward(Complex* data, std::size_t n);
void forward(CVec& data);
void backward(CVec& data);

// Row-major 2D transforms (rows x cols).
void forward_2d(CVec& data, std::size_t rows, std::size_t cols);
void backward_2d(CVec& data, std::size_t rows, std::size_t cols);

}  // namespace bnls::fft
