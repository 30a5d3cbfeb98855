#include "bnls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace bnls::fft {

namespace {

std::mutex g_plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> g_plans_1d;
std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> g_plans_2d;

fftw_plan plan_1d(std::size_t n, int sign, fftw_complex* buf) {
    std::lock_guard lock(g_plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = g_plans_1d.find(key);
    if (it != g_plans_1d.end()) return it->second;
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw_plan_dft_1d failed");
    g_plans_1d.emplace(key, p);
    return p;
}

fftw_plan plan_2d(std::size_t rows, std::size_t cols, int sign, fftw_complex* buf) {
    std::lock_guard lock(g_plan_mutex);
    auto key = std::make_tuple(rows, cols, sign);
    auto it = g_plans_2d.find(key);
    if (it != g_plans_2d.end()) return it->second;
    fftw_plan p = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols), buf, buf,
                                   sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw_plan_dft_2d failed");
    g_plans_2d.emplace(key, p);
    return p;
}

void exec_1d(Complex* data, std::size_t n, int sign) {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_plan p = plan_1d(n, sign, buf);
    fftw_execute_dft(p, buf, buf);
}

}  // namespace

void forward(Complex* data, std::size_t n) { exec_1d(data, n, FFTW_FORWARD); }
void backward(Complex* data, std::size_t n) { exec_1d(data, n, FFTW_BACKWARD); }

void forward(CVec& data) { forward(data.data(), data.size()); }
void backward(CVec& data) { backward(data.data(), data.size()); }

void forward_2d(CVec& data, std::size_t rows, std::size_t cols) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan p = plan_2d(rows, cols, FFTW_FORWARD, buf);
    fftw_execute_dft(p, buf, buf);
}

void backward_2d(CVec& data, std::size_t rows, std::size_t cols) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan p = plan_2d(rows, cols, FFTW_BACKWARD, buf);
    fftw_execute_dft(p, buf, buf);
}

}  // namespace bnls::fft
