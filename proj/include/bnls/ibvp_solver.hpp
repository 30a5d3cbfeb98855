#pragma once

#include <utility>
#include <vector>

#include "bnls/boundary_forcing.hpp"
#include "bnls/grid.hpp"
#include "bnls/norm_analyzer.hpp"
#include "bnls/time_signal.hpp"

namespace bnls::solver {

struct SolveParams {
    double s = 0.0;           // regularity, in [0, 1/2)
    double b = 0.45;          // Bourgain exponent, < 1/2
    double lambda_nl = 0.0;   // cubic nonlinearity coefficient
    double gamma_disp = -1.0; // dispersion sign (the forcing construction needs -1)
    int max_iters = 25;
    double tol = 1e-10;
    double delta_target = 0.0;  // optional rescue amplitude for rescale_data

    void validate() const;
};

// Matched boundary orders with the trace matrix A = [[a1, a2], [b1, b2]].
struct ForcingConfig {
    forcing::ForcingOrder l1, l2;
    Complex a1, a2, b1, b2;
    Complex detA;
    double det_floor = 1e-6;
};

struct BoundaryData {
    TimeSignal f;       // Dirichlet trace
    TimeSignal g;       // Neumann trace
    HalfLineSignal u0;  // initial data on x >= 0

    void validate(const GridSpec& grid) const;
};

// Row entries of the trace matrix:
//   a = trace_value(lambda)   (Dirichlet trace of L^lambda)
//   b = trace_value(lambda-1) (Neumann row; the closed form carries the
//       shifted phases and sin((2-lambda)pi/4) denominator)
std::pair<Complex, Complex> entries(forcing::ForcingOrder lambda);

// det A(lambda1, lambda2) without admissibility checks (diagnostics).
Complex determinant(double lambda1, double lambda2);

// Validates the admissibility window -3 < lambda < 1/2,
// s + 4b - 2 < lambda < s + 1/2, the pole exclusions, and the
// determinant floor.
ForcingConfig build_forcing_config(double lambda1, double lambda2, double s, double b,
                                   double det_floor = 1e-6);

// [gamma1; gamma2] = A^{-1} [f - F(.,0); I_{1/4}g - I_{1/4} dx F(.,0)]
std::pair<TimeSignal, TimeSignal> solve_gammas(const BoundaryData& data, const Field& F,
                                               const ForcingConfig& cfg);

// One application of the solution operator:
// Lambda u = psi(t) [ L^{l1} gamma1 + L^{l2} gamma2 + e^{it dx^4} u0_ext
//                     + lambda_nl D(|u|^2 u) ].
Field apply_Lambda(const Field& u_current, const BoundaryData& data, const ForcingConfig& cfg,
                   const SolveParams& p, const GridSpec& grid);

struct PicardDiagnostics {
    std::vector<double> diffs;   // Z-proxy of successive iterate differences
    std::vector<double> ratios;  // diffs[n]/diffs[n-1]
    int iterations = 0;
    bool converged = false;
    double fixed_point_residual = 0.0;  // ||Lambda u - u|| / ||u||
};

// Picard iteration u_{n+1} = Lambda u_n from the linear part. Throws
// contraction_error after three consecutive expanding iterations.
std::pair<Field, PicardDiagnostics> picard_solve(const BoundaryData& data,
                                                 const ForcingConfig& cfg,
                                                 const SolveParams& p, const GridSpec& grid);

// Zero extension of half-line data onto the symmetric grid; asserts the
// discrete H^s factor-2 bound of the extension against the half-line proxy.
SpaceSignal extend_initial(const HalfLineSignal& u0, const GridSpec& grid, double s);

// Stopping-rule norm: sup-in-t H^s + X^{s,b} of the psi-localized field.
double z_proxy(const Field& u, double s, double b);

// Proxy size of the data triple (u0, f, g) in the theorem's norms.
double data_norm(const BoundaryData& data, double s);

// Scales (u0, f, g) by delta_target / data_norm when the data is larger.
// Returns the applied factor (1.0 when already small enough).
double rescale_data(BoundaryData& data, double s, double delta_target);

// |mass(T) - mass(0) + 2 int Im(dx^3 u ubar) - 2 int Im(dx^2 u dx ubar)|
// on the half-line x > 0, for linear solves.
double mass_balance(const Field& u, double T);

}  // namespace bnls::solver
