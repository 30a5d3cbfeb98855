#pragma once

#include <string>
#include <vector>

#include "bnls/grid.hpp"
#include "bnls/time_signal.hpp"

namespace bnls::norms {

struct SobolevIndex {
    double s = 0.0;
    double b = 0.0;
};

// Discrete H^s(R): (sum <xi>^{2s} |phi_hat(xi)|^2 dxi)^{1/2} with the
// unitary transform convention, so s = 0 reproduces the L^2 norm exactly.
double hs_norm(const SpaceSignal& phi, double s);

// Zero-extension proxy of the half-line H^s norm; valid for 0 <= s < 1/2.
double hs_halfline_norm(const HalfLineSignal& phi, double s);

// Time-Sobolev norm of a sampled signal (H^sigma of its grid transform).
double ht_norm(const TimeSignal& f, double sigma);

// Bourgain norm: (sum <xi>^{2s} <tau + xi^4>^{2b} |u_tilde|^2 dtau dxi)^{1/2}.
double xsb_norm(const Field& u, SobolevIndex idx);

// Solution-space norm: sup_t H^s + sum_{j=0,1} sup_x H^{(2s+3-2j)/8} time
// traces of the psi-localized field + X^{s,b}.
double zsb_norm(const Field& u, SobolevIndex idx);

// rows scaled by the cutoff psi(t_n)
Field apply_time_cutoff(const Field& u);

enum class RatioKind {
    group_space,
    group_trace_j0,
    group_trace_j1,
    group_xsb,
    duhamel_space,
    duhamel_trace,
    duhamel_xsb,
    forcing_space,
    forcing_trace,
    forcing_xsb,
    trilinear,
};

RatioKind ratio_kind_from_string(const std::string& name);
std::string to_string(RatioKind kind);
std::vector<RatioKind> all_ratio_kinds();

struct RatioReport {
    RatioKind kind;
    SobolevIndex idx;
    std::size_t ensemble = 0;
    double max_coarse = 0.0;
    double median_coarse = 0.0;
    double max_fine = 0.0;
    double median_fine = 0.0;
    double growth = 0.0;  // max_fine / max_coarse
};

// Empirical LHS/RHS ratios of the linear and trilinear estimates on seeded
// band-limited random data, at a base grid and one dyadic refinement.
// Falsification-only: growing ratios flag an implementation bug.
RatioReport estimate_ratio_suite(RatioKind kind, std::size_t ensemble_size, SobolevIndex idx,
                                 unsigned long long seed = 12345);

}  // namespace bnls::norms
