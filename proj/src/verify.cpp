#include "bnls/verify.hpp"

#include <cmath>
#include <sstream>

#include "bnls/boundary_forcing.hpp"
#include "bnls/errors.hpp"
#include "bnls/fractional_calculus.hpp"
#include "bnls/ibvp_solver.hpp"
#include "bnls/linear_propagator.hpp"
#include "bnls/norm_analyzer.hpp"
#include "bnls/oscillatory_kernel.hpp"
#include "bnls/profiles.hpp"
#include "bnls/special_functions.hpp"

namespace bnls::verify {

namespace {

GridSpec default_grid() { return GridSpec{30.0, 512, 1.0, 257}; }

TimeSignal smooth_bump(const GridSpec& g, double scale = 1.0) {
    TimeSignal f = TimeSignal::zeros(g.nt, g.dt());
    for (std::size_t n = 0; n < g.nt; ++n) {
        double t = g.t(n);
        if (t > 0.0 && t < 1.0) {
            double s = std::sin(kPi * t);
            f.samples[n] = scale * s * s * s * s;
        }
    }
    return f;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << v;
    return ss.str();
}

Item item_b0() {
    Complex quad = osc::kernel_B(0.0, 1e-10);
    Complex closed = sf::constant_B0();
    double err = std::abs(quad - closed);
    return {"b0-identity", err <= 1e-8, err, 1e-8,
            "quadrature of the defining integral vs -(i^{7/4}/pi)Gamma(5/4)"};
}

Item item_mellin() {
    double worst = 0.0;
    for (double lam : {0.05, 0.1, 0.2, 0.25, 0.3, 0.35}) {
        auto mc = osc::mellin_check(lam, 1e-8);
        worst = std::max(worst, std::abs(mc.lhs - mc.rhs) / std::abs(mc.rhs));
    }
    return {"mellin-identity", worst <= 1e-5, worst, 1e-5,
            "relative lhs/rhs mismatch over lambda in {0.05..0.35}"};
}

Item item_trace_values() {
    GridSpec g = default_grid();
    TimeSignal sig = smooth_bump(g);
    double scale = sup_abs(sig);
    double worst = 0.0;
    for (double lam : {-1.0, 0.0, 0.25, 1.0 / 3.0}) {
        forcing::ForcingOrder ord(lam);
        Field L = forcing::forcing_Llambda(sig, ord, g);
        TimeSignal tr = prop::trace_time(L, 0.0, 0);
        Complex tv = forcing::trace_value(ord);
        for (std::size_t n = 0; n < g.nt; ++n) {
            if (g.t(n) < 0.1) continue;
            double err = std::abs(tr.samples[n] - tv * sig.samples[n]) / scale;
            worst = std::max(worst, err);
        }
    }
    double a0 = std::abs(forcing::trace_value(forcing::ForcingOrder(0.0)) - 1.0);
    bool pole_ok = false;
    try {
        forcing::trace_value(forcing::ForcingOrder(1.0));
    } catch (const pole_error&) {
        pole_ok = true;
    }
    bool pass = worst <= 1e-3 && a0 <= 1e-10 && pole_ok;
    return {"trace-values", pass, worst, 1e-3,
            "sup-t trace mismatch over lambda in {-1, 0, 1/4, 1/3}; a(0) err " + fmt(a0) +
                (pole_ok ? "; lambda=1 pole raised" : "; lambda=1 pole MISSING")};
}

Item item_jump() {
    GridSpec g = default_grid();
    TimeSignal f = smooth_bump(g);
    const double t = 0.6;
    auto [left, right] = forcing::third_derivative_jump(f, t, g);
    TimeSignal h = frac::frac_derivative(f, -0.75);
    auto n = static_cast<std::size_t>(std::llround(t / g.dt()));
    Complex ht = h.samples[n];
    Complex M = sf::constant_M();
    Complex expect_right = -kI * M / 2.0 * ht;
    Complex expect_left = kI * M / 2.0 * ht;
    double err = std::max(std::abs(right - expect_right), std::abs(left - expect_left)) /
                 std::abs(expect_right);
    return {"third-derivative-jump", err <= 5e-2, err, 5e-2,
            "one-sided limits of dx^3 L0 f vs -+ i(M/2) I_{-3/4}f"};
}

Item item_derivative_relation() {
    GridSpec g{16.0, 256, 1.0, 129};
    TimeSignal sig = smooth_bump(g);
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        Field lhs = forcing::forcing_Llambda_integrated(
            sig, forcing::ForcingOrder(-static_cast<double>(k)), g);
        Field rhs = forcing::forcing_Llambda(sig, forcing::ForcingOrder(-static_cast<double>(k)),
                                             g);
        double peak = max_abs(rhs);
        for (std::size_t n = 0; n < g.nt; ++n) {
            auto rl = lhs.row(n);
            auto rr = rhs.row(n);
            for (std::size_t m = 0; m < g.nx; ++m) {
                if (std::abs(g.x(m)) <= 3.0 * g.dx()) continue;
                worst = std::max(worst, std::abs(rl[m] - rr[m]) / peak);
            }
        }
    }
    return {"derivative-relation", worst <= 2e-2, worst, 2e-2,
            "L^{-k} integrated form vs dx^k L0 I_{k/4}, k = 1,2,3, away from x=0"};
}

Item item_entries() {
    double worst_alg = 0.0;
    for (double lam : {0.0, 0.25, 1.0 / 3.0, -0.5, 0.4}) {
        auto [a, b] = solver::entries(forcing::ForcingOrder(lam));
        Complex bref = forcing::trace_value(forcing::ForcingOrder(lam - 1.0));
        worst_alg = std::max(worst_alg, std::abs(b - bref));
        (void)a;
    }

    // numeric: dx trace of L^lambda gamma = b(lambda) I_{-1/4} gamma
    GridSpec g = default_grid();
    TimeSignal sig = smooth_bump(g);
    const double lam = 1.0 / 3.0;
    Field L = forcing::forcing_Llambda(sig, forcing::ForcingOrder(lam), g);
    TimeSignal tr = prop::trace_time(L, 0.0, 1);
    TimeSignal ref = frac::frac_derivative(sig, -0.25);
    auto [a, b] = solver::entries(forcing::ForcingOrder(lam));
    (void)a;
    double scale = sup_abs(ref) * std::abs(b);
    double worst_num = 0.0;
    for (std::size_t n = 0; n < g.nt; ++n) {
        if (g.t(n) < 0.1) continue;
        worst_num = std::max(worst_num,
                             std::abs(tr.samples[n] - b * ref.samples[n]) / scale);
    }
    bool pass = worst_alg <= 1e-12 && worst_num <= 1e-3;
    return {"entries-cross-check", pass, worst_num, 1e-3,
            "b(lambda) vs trace_value(lambda-1) (err " + fmt(worst_alg) +
                ") and vs the numeric derivative trace at lambda = 1/3"};
}

Item item_determinant() {
    Complex det = solver::determinant(0.0, 1.0 / 3.0);
    double err = std::abs(std::abs(det) - 0.36602540378443865);
    bool same_zero = std::abs(solver::determinant(0.2, 0.2)) < 1e-14;
    bool pole_a = false, pole_b = false;
    try {
        solver::entries(forcing::ForcingOrder(-3.0));
    } catch (const pole_error&) {
        pole_a = true;
    }
    try {
        solver::entries(forcing::ForcingOrder(2.0));
    } catch (const pole_error&) {
        pole_b = true;
    }
    bool cfg_ok = false;
    try {
        solver::build_forcing_config(0.0, 1.0 / 3.0, 0.0, 0.45);
        cfg_ok = true;
    } catch (...) {
    }
    bool pass = err <= 1e-12 && same_zero && pole_a && pole_b && cfg_ok;
    return {"determinant-admissibility", pass, err, 1e-12,
            std::string("|det A(0,1/3)| vs closed value; det(l,l)=0 ") +
                (same_zero ? "ok" : "FAIL") + "; pole exclusions " +
                ((pole_a && pole_b) ? "raised" : "MISSING")};
}

Item item_mass_balance() {
    GridSpec g = default_grid();
    auto man = profiles::manufactured_linear(g);
    auto cfg = solver::build_forcing_config(0.0, 1.0 / 3.0, 0.0, 0.45);
    solver::SolveParams p;
    p.lambda_nl = 0.0;
    auto [u, diag] = solver::picard_solve(man.data, cfg, p, g);
    (void)diag;
    double resid = solver::mass_balance(u, g.T);
    double m0 = 0.0;
    for (std::size_t m = g.origin_index(); m < g.nx; ++m) m0 += std::norm(u.at(0, m)) * g.dx();
    double rel = resid / std::max(m0, 1e-300);
    return {"mass-balance", rel <= 1e-3, rel, 1e-3,
            "half-line mass identity residual, manufactured linear solve"};
}

Item item_semigroup() {
    double errs[2];
    for (int r = 0; r < 2; ++r) {
        std::size_t nt = (r == 0) ? 129 : 257;
        TimeSignal f = TimeSignal::zeros(nt, 1.0 / static_cast<double>(nt - 1));
        for (std::size_t n = 0; n < nt; ++n) {
            double t = f.time(n);
            f.samples[n] = t * t * std::exp(-t) * Complex(1.0, 0.5);
        }
        TimeSignal a = frac::frac_integral(frac::frac_integral(f, 0.5), 0.5);
        TimeSignal b = frac::frac_integral(f, 1.0);
        errs[r] = sup_abs(a - b);
    }
    double order = std::log2(errs[0] / errs[1]);
    return {"fractional-semigroup", order >= 1.8, order, 1.8,
            "observed order of ||I_1/2 I_1/2 f - I_1 f||_inf under dt halving (err " +
                fmt(errs[0]) + " -> " + fmt(errs[1]) + ")"};
}

Item item_ratio_suite(const Options& opts) {
    double worst_growth = 0.0;
    std::string detail;
    for (auto kind : norms::all_ratio_kinds()) {
        auto rep = norms::estimate_ratio_suite(kind, opts.ensemble, {0.0, 0.45}, opts.seed);
        worst_growth = std::max(worst_growth, rep.growth);
        detail += norms::to_string(kind) + "=" + fmt(rep.growth) + " ";
    }
    return {"estimate-ratio-growth", worst_growth <= 1.1, worst_growth, 1.1, detail};
}

}  // namespace

std::vector<Item> run_all(const Options& opts, const std::function<void(const Item&)>& on_item) {
    std::vector<Item> items;
    auto push = [&](Item it) {
        if (on_item) on_item(it);
        items.push_back(std::move(it));
    };
    push(item_b0());
    push(item_mellin());
    push(item_trace_values());
    push(item_jump());
    push(item_derivative_relation());
    push(item_entries());
    push(item_determinant());
    push(item_semigroup());
    push(item_mass_balance());
    if (opts.with_ratio_suite) push(item_ratio_suite(opts));
    return items;
}

bool all_pass(const std::vector<Item>& items) {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

}  // namespace bnls::verify
