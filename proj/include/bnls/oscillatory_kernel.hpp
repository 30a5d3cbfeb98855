#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bnls/types.hpp"

namespace bnls::osc {

// B(x) = (1/2pi) int_R e^{i x xi} e^{-i xi^4} dxi, evaluated as
// B1(x) + B1(-x) with each half-line rotated onto xi = r e^{-i pi/8}
// where the quartic phase becomes pure decay e^{-r^4}. B is even and
// entire; beyond |x| ~ 45 the rotated integrand's interior maximum
// exhausts double precision and evaluation refuses.
Complex kernel_B(double x, double tol = 1e-10);

// Half-line piece at a complex argument (analytic continuation),
// B1(z) = (1/2pi) int_0^inf e^{i z xi - i xi^4} dxi.
Complex kernel_B1(Complex z, double tol = 1e-10);

// Real-axis evaluation with e^{-eps xi} regularization: the quartic
// oscillation is integrated exactly against a piecewise-linear amplitude
// after the substitution eta = xi^4 (no contour rotation involved).
Complex kernel_B_realaxis(double x, double eps, double tol = 1e-9);

// Richardson extrapolation of kernel_B_realaxis over eps -> 0.
Complex kernel_B_realaxis_extrapolated(double x, double tol = 1e-9);

struct MellinCheck {
    Complex lhs;           // quadrature of int_0^inf x^{lambda-1} B(x) dx
    Complex rhs;           // Gamma(lambda) Gamma(1/4 - lambda/4)/(8 pi) (...)
    double tail_estimate;  // bound on the neglected tail of lhs
};

// Both sides of the Mellin identity for 0 < lambda < 3/8. The lhs head
// [0,1] uses Gauss-Jacobi quadrature with weight x^{lambda-1}, [1,X] is
// adaptive, and the tail [X,inf) is rotated into the complex plane with
// the O(1/z) endpoint parts of B1 subtracted (their closed forms cancel
// between the upper and lower rotations).
MellinCheck mellin_check(double lambda, double tol = 1e-8);

// Tabulated B on [0, x_max] with uniform spacing; eval() interpolates
// cubically and uses evenness for x < 0.
class KernelTable {
  public:
    KernelTable() = default;
    static KernelTable build(double x_max = 30.0, double dx = 0.02, double quad_tol = 1e-9);

    Complex eval(double x) const;
    double x_max() const { return xs_.empty() ? 0.0 : xs_.back(); }
    double quad_tol() const { return quad_tol_; }
    const std::vector<double>& xs() const { return xs_; }
    const CVec& values() const { return values_; }

    void dump_csv(const std::string& path) const;

  private:
    std::vector<double> xs_;
    CVec values_;
    double dx_ = 0.0;
    double quad_tol_ = 0.0;
};

// Gauss-Jacobi nodes/weights for int_{-1}^{1} (1-t)^a (1+t)^b f(t) dt.
void gauss_jacobi(int n, double a, double b, std::vector<double>& nodes,
                  std::vector<double>& weights);

// Adaptive complex-valued quadrature on [a, b] (Gauss-Kronrod on each part).
Complex integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                          double tol);

}  // namespace bnls::osc
