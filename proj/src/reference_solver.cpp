#include "bnls/reference_solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>

#include "bnls/diag.hpp"
#include "bnls/errors.hpp"

namespace bnls::reference {

void FDGrid::validate() const {
    if (!(xmax > 0.0 && T > 0.0)) throw config_error("FDGrid: extents must be positive");
    if (nx < 8) throw config_error("FDGrid: need at least 5 interior points");
    if (nt < 3) throw config_error("FDGrid: nt too small");
}

FDField cn_solve(const FDData& data, double lambda_nl, const FDGrid& grid) {
    grid.validate();
    data.f.validate();
    data.g.validate();
    if (data.f.size() != grid.nt || data.g.size() != grid.nt)
        throw config_error("cn_solve: boundary traces must have nt samples");
    if (data.u0.size() != grid.nx) throw config_error("cn_solve: u0 must have nx samples");

    const double dx = grid.dx(), dt = grid.dt();
    const double inv4 = 1.0 / (dx * dx * dx * dx);
    diag::warn("cn-grid-ratio", "dt/dx^4 = " + std::to_string(dt * inv4));

    const std::size_t N = grid.nx - 3;  // unknowns i = 1..nx-3
    const Complex imu = kI * (dt / 2.0);

    using SpMat = Eigen::SparseMatrix<Complex>;
    SpMat A(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    std::vector<Eigen::Triplet<Complex>> trip;
    auto add = [&](std::size_t r, std::ptrdiff_t c, double v) {
        if (c < 0 || c >= static_cast<std::ptrdiff_t>(N)) return;
        trip.emplace_back(static_cast<int>(r), static_cast<int>(c), imu * (v * inv4));
    };
    // K row for unknown index r (grid node i = r+1)
    for (std::size_t r = 0; r < N; ++r) {
        auto i = static_cast<std::ptrdiff_t>(r);
        if (r == 0) {
            add(r, i, 7.0);
            add(r, i + 1, -4.0);
            add(r, i + 2, 1.0);
        } else {
            add(r, i - 2, 1.0);
            add(r, i - 1, -4.0);
            add(r, i, 6.0);
            add(r, i + 1, -4.0);
            add(r, i + 2, 1.0);
        }
        trip.emplace_back(static_cast<int>(r), static_cast<int>(r), Complex(1.0));
    }
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<SpMat> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) throw std::runtime_error("cn_solve: factorization failed");

    // K u (without the identity), for the explicit side
    auto applyK = [&](const Eigen::VectorXcd& u) {
        Eigen::VectorXcd out(static_cast<Eigen::Index>(N));
        auto at = [&](std::ptrdiff_t c) -> Complex {
            return (c < 0 || c >= static_cast<std::ptrdiff_t>(N)) ? Complex(0.0)
                                                                  : u(static_cast<int>(c));
        };
        for (std::size_t r = 0; r < N; ++r) {
            auto i = static_cast<std::ptrdiff_t>(r);
            Complex v;
            if (r == 0)
                v = 7.0 * at(i) - 4.0 * at(i + 1) + at(i + 2);
            else
                v = at(i - 2) - 4.0 * at(i - 1) + 6.0 * at(i) - 4.0 * at(i + 1) + at(i + 2);
            out(static_cast<int>(r)) = v * inv4;
        }
        return out;
    };

    auto bc = [&](std::size_t n) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(N));
        const Complex f = data.f.samples[n];
        const Complex gb = data.g.samples[n];
        v(0) = (-4.0 * f - 2.0 * dx * gb) * inv4;
        if (N > 1) v(1) = f * inv4;
        return v;
    };

    auto cubic = [&](const Eigen::VectorXcd& u) {
        Eigen::VectorXcd w(u.size());
        for (Eigen::Index i = 0; i < u.size(); ++i) w(i) = std::norm(u(i)) * u(i);
        return w;
    };

    FDField out;
    out.grid = grid;
    out.data.assign(grid.nt * grid.nx, Complex(0.0));

    Eigen::VectorXcd u(static_cast<Eigen::Index>(N));
    for (std::size_t r = 0; r < N; ++r) u(static_cast<int>(r)) = data.u0.samples[r + 1];

    auto write_row = [&](std::size_t n, const Eigen::VectorXcd& v) {
        auto row = out.row(n);
        row[0] = data.f.samples[n];
        for (std::size_t r = 0; r < N; ++r) row[r + 1] = v(static_cast<int>(r));
        row[grid.nx - 2] = Complex(0.0);
        row[grid.nx - 1] = Complex(0.0);
    };
    {
        Eigen::VectorXcd u_init = u;
        write_row(0, u_init);
        auto row = out.row(0);
        for (std::size_t i = 0; i < grid.nx; ++i) row[i] = data.u0.samples[i];
    }

    double umax = 0.0;
    for (std::size_t n = 0; n + 1 < grid.nt; ++n) {
        Eigen::VectorXcd expl = u - imu * applyK(u) - imu * (bc(n) + bc(n + 1));
        Eigen::VectorXcd Nn = cubic(u);
        Eigen::VectorXcd unew = u;
        for (int inner = 0; inner < 2; ++inner) {
            Eigen::VectorXcd rhs =
                expl + imu * lambda_nl * (cubic(unew) + Nn);
            unew = lu.solve(rhs);
            if (!unew.allFinite())
                throw std::runtime_error("cn_solve: inner fixed-point iteration diverged");
        }
        u = unew;
        write_row(n + 1, u);
        umax = std::max(umax, u.cwiseAbs().maxCoeff());
    }

    double edge = 0.0;
    for (std::size_t n = 0; n < grid.nt; ++n) {
        auto row = out.row(n);
        for (std::size_t i = grid.nx - 5; i < grid.nx - 2; ++i)
            edge = std::max(edge, std::abs(row[i]));
    }
    if (umax > 0.0 && edge > 1e-8 * umax)
        diag::warn("cn-right-boundary",
                   "solution reaches the clamped right boundary above 1e-8 of its peak");
    return out;
}

double fd_mass_balance(const FDField& u) {
    const FDGrid& g = u.grid;
    const double dx = g.dx(), dt = g.dt();

    auto mass = [&](std::size_t n) {
        auto row = u.row(n);
        double acc = 0.0;
        for (std::size_t i = 0; i < g.nx; ++i) {
            double w = (i == 0 || i == g.nx - 1) ? 0.5 : 1.0;
            acc += w * std::norm(row[i]);
        }
        return acc * dx;
    };

    double flux3 = 0.0, flux2 = 0.0;
    for (std::size_t n = 0; n < g.nt; ++n) {
        auto row = u.row(n);
        Complex u0 = row[0];
        Complex d1 = (-1.5 * row[0] + 2.0 * row[1] - 0.5 * row[2]) / dx;
        Complex d2 = (2.0 * row[0] - 5.0 * row[1] + 4.0 * row[2] - row[3]) / (dx * dx);
        Complex d3 = (-2.5 * row[0] + 9.0 * row[1] - 12.0 * row[2] + 7.0 * row[3] -
                      1.5 * row[4]) /
                     (dx * dx * dx);
        double w = (n == 0 || n == g.nt - 1) ? 0.5 : 1.0;
        flux3 += w * std::imag(d3 * std::conj(u0)) * dt;
        flux2 += w * std::imag(d2 * std::conj(d1)) * dt;
    }
    return std::abs(mass(g.nt - 1) - mass(0) + 2.0 * flux3 - 2.0 * flux2);
}

}  // namespace bnls::reference
