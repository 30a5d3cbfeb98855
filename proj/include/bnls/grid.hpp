#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bnls/types.hpp"

namespace bnls {

// Truncated periodic space-time lattice: x in [-L, L), nx samples
// (power of two), t in [0, T], nt samples.
struct GridSpec {
    double L = 30.0;
    std::size_t nx = 512;
    double T = 1.0;
    std::size_t nt = 257;

    double dx() const { return 2.0 * L / static_cast<double>(nx); }
    double dt() const { return T / static_cast<double>(nt - 1); }
    double x(std::size_t m) const { return -L + dx() * static_cast<double>(m); }
    double t(std::size_t n) const { return dt() * static_cast<double>(n); }
    std::size_t origin_index() const { return nx / 2; }  // node at x = 0

    // frequency of DFT mode k (FFTW ordering), xi_k = pi k' / L
    double freq(std::size_t k) const {
        auto ik = static_cast<std::ptrdiff_t>(k);
        auto half = static_cast<std::ptrdiff_t>(nx / 2);
        if (ik >= half) ik -= static_cast<std::ptrdiff_t>(nx);
        return kPi * static_cast<double>(ik) / L;
    }
    double freq_max() const { return kPi * static_cast<double>(nx / 2) / L; }

    void validate() const;
    bool operator==(const GridSpec&) const = default;
};

struct SpaceSignal {
    CVec samples;
    GridSpec grid;

    SpaceSignal() = default;
    SpaceSignal(CVec s, const GridSpec& g) : samples(std::move(s)), grid(g) {}
    static SpaceSignal zeros(const GridSpec& g) {
        return SpaceSignal(CVec(g.nx, Complex(0.0)), g);
    }
    std::size_t size() const { return samples.size(); }
};

// Half-line samples at x_j = j*dx, j = 0..n-1.
struct HalfLineSignal {
    CVec samples;
    double dx = 0.0;

    std::size_t size() const { return samples.size(); }
    double x(std::size_t j) const { return dx * static_cast<double>(j); }
};

// Space-time field, row-major: row n holds u(t_n, .).
struct Field {
    CVec data;
    GridSpec grid;

    Field() = default;
    explicit Field(const GridSpec& g) : data(g.nt * g.nx, Complex(0.0)), grid(g) {}
    Field(const GridSpec& g, const SpaceSignal& initial);

    std::span<Complex> row(std::size_t n) { return {data.data() + n * grid.nx, grid.nx}; }
    std::span<const Complex> row(std::size_t n) const {
        return {data.data() + n * grid.nx, grid.nx};
    }
    Complex at(std::size_t n, std::size_t m) const { return data[n * grid.nx + m]; }

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(Complex c);
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);

double max_abs(const Field& u);
double rel_l2_distance(const Field& a, const Field& b);

}  // namespace bnls
