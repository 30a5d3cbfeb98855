#include "bnls/ibvp_solver.hpp"

#include <cmath>

#include "bnls/diag.hpp"
#include "bnls/errors.hpp"
#include "bnls/fractional_calculus.hpp"
#include "bnls/linear_propagator.hpp"
#include "bnls/special_functions.hpp"

namespace bnls::solver {

void SolveParams::validate() const {
    if (!(s >= 0.0 && s < 0.5)) throw config_error("SolveParams: s must lie in [0, 1/2)");
    if (!(b < 0.5)) throw config_error("SolveParams: b must be < 1/2");
    if (gamma_disp != -1.0)
        throw config_error("SolveParams: the boundary forcing construction requires "
                           "gamma_disp = -1");
    if (max_iters < 1) throw config_error("SolveParams: max_iters must be >= 1");
    if (!(tol > 0.0)) throw config_error("SolveParams: tol must be positive");
}

void BoundaryData::validate(const GridSpec& grid) const {
    f.validate();
    g.validate();
    if (!f.causal || !g.causal) throw config_error("BoundaryData: traces must be causal");
    if (f.size() != grid.nt || g.size() != grid.nt)
        throw config_error("BoundaryData: trace length must match grid.nt");
    if (std::abs(f.dt - grid.dt()) > 1e-12 * grid.dt() ||
        std::abs(g.dt - grid.dt()) > 1e-12 * grid.dt())
        throw config_error("BoundaryData: trace sampling must match grid.dt");
    if (u0.size() != grid.nx / 2) throw config_error("BoundaryData: u0 must hold nx/2 samples");
    if (std::abs(u0.dx - grid.dx()) > 1e-12 * grid.dx())
        throw config_error("BoundaryData: u0 sampling must match grid.dx");
    if (grid.nt < 8 || grid.nx < 64)
        throw config_error("BoundaryData: grid too coarse (need nt >= 8, nx >= 64)");
}

std::pair<Complex, Complex> entries(forcing::ForcingOrder lambda) {
    if (lambda.dirichlet_pole())
        throw pole_error("entries: a-entry pole (lambda in 1-4Z) at lambda = " +
                         std::to_string(lambda.lambda));
    if (lambda.neumann_pole())
        throw pole_error("entries: b-entry pole (lambda in 2-4Z) at lambda = " +
                         std::to_string(lambda.lambda));
    const double lam = lambda.lambda;
    const Complex M = sf::constant_M();
    Complex a = forcing::trace_value(lambda);
    Complex num = std::exp(-kI * kPi * (-2.0 + 3.0 * lam) / 8.0) +
                  std::exp(-kI * kPi * (6.0 - 5.0 * lam) / 8.0);
    Complex b = M / 8.0 * num / std::sin((2.0 - lam) * kPi / 4.0);
    return {a, b};
}

Complex determinant(double lambda1, double lambda2) {
    auto [a1, b1] = entries(forcing::ForcingOrder(lambda1));
    auto [a2, b2] = entries(forcing::ForcingOrder(lambda2));
    return a1 * b2 - a2 * b1;
}

ForcingConfig build_forcing_config(double lambda1, double lambda2, double s, double b,
                                   double det_floor) {
    auto window = [&](double lam) {
        if (!(lam > -3.0 && lam < 0.5))
            throw window_error("forcing order outside (-3, 1/2): " + std::to_string(lam));
        if (!(lam > s + 4.0 * b - 2.0 && lam < s + 0.5))
            throw window_error("forcing order outside (s+4b-2, s+1/2): " + std::to_string(lam));
    };
    window(lambda1);
    window(lambda2);

    ForcingConfig cfg{forcing::ForcingOrder(lambda1), forcing::ForcingOrder(lambda2),
                      {}, {}, {}, {}, {}, det_floor};
    std::tie(cfg.a1, cfg.b1) = entries(cfg.l1);
    std::tie(cfg.a2, cfg.b2) = entries(cfg.l2);
    cfg.detA = cfg.a1 * cfg.b2 - cfg.a2 * cfg.b1;
    if (std::abs(cfg.detA) < det_floor)
        throw singular_matrix_error("trace matrix determinant below floor: |det| = " +
                                    std::to_string(std::abs(cfg.detA)));
    return cfg;
}

std::pair<TimeSignal, TimeSignal> solve_gammas(const BoundaryData& data, const Field& F,
                                               const ForcingConfig& cfg) {
    const GridSpec& g = F.grid;
    TimeSignal F0 = prop::trace_time(F, 0.0, 0);
    TimeSignal F1 = prop::trace_time(F, 0.0, 1);

    TimeSignal rhs1 = TimeSignal::zeros(g.nt, g.dt());
    TimeSignal gm = TimeSignal::zeros(g.nt, g.dt());
    for (std::size_t n = 0; n < g.nt; ++n) {
        rhs1.samples[n] = data.f.samples[n] - F0.samples[n];
        gm.samples[n] = data.g.samples[n] - F1.samples[n];
    }
    TimeSignal rhs2 = frac::frac_integral(gm, 0.25);

    const Complex det = cfg.detA;
    TimeSignal g1 = TimeSignal::zeros(g.nt, g.dt());
    TimeSignal g2 = TimeSignal::zeros(g.nt, g.dt());
    for (std::size_t n = 0; n < g.nt; ++n) {
        Complex r1 = rhs1.samples[n], r2 = rhs2.samples[n];
        g1.samples[n] = (cfg.b2 * r1 - cfg.a2 * r2) / det;
        g2.samples[n] = (-cfg.b1 * r1 + cfg.a1 * r2) / det;
    }
    return {g1, g2};
}

SpaceSignal extend_initial(const HalfLineSignal& u0, const GridSpec& grid, double s) {
    if (!(s < 0.5)) throw std::domain_error("extend_initial: zero extension needs s < 1/2");
    if (u0.size() != grid.nx / 2) throw config_error("extend_initial: size mismatch");
    if (std::abs(u0.dx - grid.dx()) > 1e-12 * grid.dx())
        throw config_error("extend_initial: dx mismatch");
    SpaceSignal out = SpaceSignal::zeros(grid);
    const std::size_t m0 = grid.origin_index();
    for (std::size_t j = 0; j < u0.size(); ++j) out.samples[m0 + j] = u0.samples[j];

    double ext = norms::hs_norm(out, std::max(s, 0.0));
    double proxy = norms::hs_halfline_norm(u0, std::max(s, 0.0));
    if (ext > 2.0 * proxy + 1e-14)
        throw std::runtime_error("extend_initial: extension norm exceeds twice the half-line "
                                 "proxy");
    return out;
}

namespace {

Field cubic_nonlinearity(const Field& u) {
    Field w(u.grid);
    for (std::size_t i = 0; i < u.data.size(); ++i) {
        const Complex v = u.data[i];
        w.data[i] = std::norm(v) * v;
    }
    return w;
}

}  // namespace

Field apply_Lambda(const Field& u_current, const BoundaryData& data, const ForcingConfig& cfg,
                   const SolveParams& p, const GridSpec& grid) {
    p.validate();
    data.validate(grid);

    SpaceSignal u0_ext = extend_initial(data.u0, grid, p.s);
    Field F = prop::group_field(u0_ext, grid, p.gamma_disp);
    if (p.lambda_nl != 0.0) {
        Field D = prop::duhamel_D(cubic_nonlinearity(u_current), p.gamma_disp);
        D *= Complex(p.lambda_nl);
        F += D;
    }

    auto [g1, g2] = solve_gammas(data, F, cfg);
    Field out = forcing::forcing_Llambda(g1, cfg.l1, grid);
    out += forcing::forcing_Llambda(g2, cfg.l2, grid);
    out += F;

    for (std::size_t n = 0; n < grid.nt; ++n) {
        double psi = frac::cutoff_psi(grid.t(n));
        auto row = out.row(n);
        for (auto& v : row) v *= psi;
    }
    return out;
}

double z_proxy(const Field& u, double s, double b) {
    double sup_hs = 0.0;
    const GridSpec& g = u.grid;
    for (std::size_t n = 0; n < g.nt; ++n) {
        SpaceSignal row(CVec(u.row(n).begin(), u.row(n).end()), g);
        sup_hs = std::max(sup_hs, norms::hs_norm(row, s));
    }
    Field loc = norms::apply_time_cutoff(u);
    return sup_hs + norms::xsb_norm(loc, {s, b});
}

double data_norm(const BoundaryData& data, double s) {
    double nu0 = norms::hs_halfline_norm(data.u0, s);
    double nf = norms::ht_norm(data.f, (2.0 * s + 3.0) / 8.0);
    double ng = norms::ht_norm(data.g, (2.0 * s + 1.0) / 8.0);
    return nu0 + nf + ng;
}

double rescale_data(BoundaryData& data, double s, double delta_target) {
    if (!(delta_target > 0.0)) return 1.0;
    double nu = data_norm(data, s);
    if (nu <= delta_target || nu == 0.0) return 1.0;
    double c = delta_target / nu;
    for (auto& v : data.f.samples) v *= c;
    for (auto& v : data.g.samples) v *= c;
    for (auto& v : data.u0.samples) v *= c;
    return c;
}

std::pair<Field, PicardDiagnostics> picard_solve(const BoundaryData& data,
                                                 const ForcingConfig& cfg,
                                                 const SolveParams& p, const GridSpec& grid) {
    p.validate();
    PicardDiagnostics diag;

    Field u(grid);  // zero start; first application yields the linear part
    Field next = apply_Lambda(u, data, cfg, p, grid);
    int expanding = 0;
    for (int it = 1; it <= p.max_iters; ++it) {
        double d = z_proxy(next - u, p.s, p.b);
        diag.diffs.push_back(d);
        diag.iterations = it;
        if (diag.diffs.size() >= 2) {
            double prev = diag.diffs[diag.diffs.size() - 2];
            double r = prev > 0.0 ? d / prev : 0.0;
            diag.ratios.push_back(r);
            expanding = (r > 1.0) ? expanding + 1 : 0;
            if (expanding >= 3)
                throw contraction_error(
                    "picard_solve: expanding iterates (data too large for the contraction "
                    "regime); shrink the data amplitude or T");
        }
        u = next;
        double scale = z_proxy(u, p.s, p.b);
        if (d <= p.tol * std::max(1.0, scale)) {
            diag.converged = true;
            diag.fixed_point_residual = scale > 0.0 ? d / scale : d;
            return {u, diag};
        }
        next = apply_Lambda(u, data, cfg, p, grid);
    }
    double d = z_proxy(next - u, p.s, p.b);
    double scale = z_proxy(u, p.s, p.b);
    diag.fixed_point_residual = scale > 0.0 ? d / scale : d;
    diag.converged = d <= p.tol * std::max(1.0, scale);
    return {u, diag};
}

double mass_balance(const Field& u, double T) {
    const GridSpec& g = u.grid;
    auto nT = static_cast<std::size_t>(std::llround(T / g.dt()));
    nT = std::min(nT, g.nt - 1);

    auto halfmass = [&](std::size_t n) {
        auto row = u.row(n);
        double acc = 0.0;
        const std::size_t m0 = g.origin_index();
        for (std::size_t m = m0; m < g.nx; ++m) {
            double w = (m == m0 || m == g.nx - 1) ? 0.5 : 1.0;
            acc += w * std::norm(row[m]);
        }
        return acc * g.dx();
    };

    TimeSignal t0 = prop::trace_time(u, 0.0, 0);
    TimeSignal t1 = prop::trace_time(u, 0.0, 1);
    TimeSignal t2 = prop::trace_time(u, 0.0, 2);
    TimeSignal t3 = prop::trace_time(u, 0.0, 3);

    double flux3 = 0.0, flux2 = 0.0;
    for (std::size_t n = 0; n <= nT; ++n) {
        double w = (n == 0 || n == nT) ? 0.5 : 1.0;
        flux3 += w * std::imag(t3.samples[n] * std::conj(t0.samples[n])) * g.dt();
        flux2 += w * std::imag(t2.samples[n] * std::conj(t1.samples[n])) * g.dt();
    }

    return std::abs(halfmass(nT) - halfmass(0) + 2.0 * flux3 - 2.0 * flux2);
}

}  // namespace bnls::solver
