#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bnls/boundary_forcing.hpp"
#include "bnls/diag.hpp"
#include "bnls/errors.hpp"
#include "bnls/fractional_calculus.hpp"
#include "bnls/ibvp_solver.hpp"
#include "bnls/linear_propagator.hpp"
#include "bnls/norm_analyzer.hpp"
#include "bnls/oscillatory_kernel.hpp"
#include "bnls/profiles.hpp"
#include "bnls/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace bnls;

namespace {

struct RunConfig {
    std::string mode = "verify";
    double s = 0.0, b = 0.45;
    double lambda1 = 0.0, lambda2 = 1.0 / 3.0;
    double lambda_nl = 0.0;
    std::size_t nx = 512, nt = 257;
    double L = 30.0, T = 1.0;
    std::string profile = "zero";
    std::string data_dir;
    std::string out = "out";
    unsigned long long seed = 12345;
    double tol = 1e-10;
    double delta_target = 0.0;
};

// one run per output directory
class DirLock {
  public:
    explicit DirLock(const fs::path& dir) : path_(dir / "lock") {
        fs::create_directories(dir);
        std::FILE* f = std::fopen(path_.c_str(), "wx");
        if (!f) throw config_error("output directory is locked by another run: " + dir.string());
        std::fclose(f);
    }
    ~DirLock() { std::error_code ec; fs::remove(path_, ec); }

  private:
    fs::path path_;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_field_csv(const fs::path& p, const Field& u) {
    std::ofstream out(p);
    out << "t,x,re,im\n";
    const GridSpec& g = u.grid;
    for (std::size_t n = 0; n < g.nt; ++n) {
        auto row = u.row(n);
        for (std::size_t m = 0; m < g.nx; ++m)
            out << num(g.t(n)) << ',' << num(g.x(m)) << ',' << num(row[m].real()) << ','
                << num(row[m].imag()) << '\n';
    }
}

void write_trace_csv(const fs::path& p, const TimeSignal& f) {
    std::ofstream out(p);
    out << "t,re,im\n";
    for (std::size_t n = 0; n < f.size(); ++n)
        out << num(f.time(n)) << ',' << num(f.samples[n].real()) << ','
            << num(f.samples[n].imag()) << '\n';
}

int run_solve(const RunConfig& rc) {
    GridSpec grid{rc.L, rc.nx, rc.T, rc.nt};
    grid.validate();

    solver::BoundaryData data = rc.data_dir.empty() ? profiles::by_name(rc.profile, grid)
                                                    : profiles::from_files(rc.data_dir, grid);
    auto cfg = solver::build_forcing_config(rc.lambda1, rc.lambda2, rc.s, rc.b);
    solver::SolveParams p;
    p.s = rc.s;
    p.b = rc.b;
    p.lambda_nl = rc.lambda_nl;
    p.tol = rc.tol;
    p.delta_target = rc.delta_target;
    double scale = solver::rescale_data(data, rc.s, rc.delta_target);

    auto [u, pd] = solver::picard_solve(data, cfg, p, grid);

    TimeSignal trd = prop::trace_time(u, 0.0, 0);
    TimeSignal trn = prop::trace_time(u, 0.0, 1);
    double plug_f = 0.0, plug_g = 0.0, fscale = 0.0, gscale = 0.0;
    for (std::size_t n = 0; n < grid.nt; ++n) {
        if (grid.t(n) > std::min(grid.T, 1.0)) break;
        plug_f = std::max(plug_f, std::abs(trd.samples[n] - data.f.samples[n]));
        plug_g = std::max(plug_g, std::abs(trn.samples[n] - data.g.samples[n]));
        fscale = std::max(fscale, std::abs(data.f.samples[n]));
        gscale = std::max(gscale, std::abs(data.g.samples[n]));
    }

    write_field_csv(fs::path(rc.out) / "field.csv", u);
    write_trace_csv(fs::path(rc.out) / "trace_dirichlet.csv", trd);
    write_trace_csv(fs::path(rc.out) / "trace_neumann.csv", trn);

    json diag;
    diag["config"] = {{"mode", rc.mode},     {"s", rc.s},
                      {"b", rc.b},           {"lambda1", rc.lambda1},
                      {"lambda2", rc.lambda2},{"lambda_nl", rc.lambda_nl},
                      {"nx", rc.nx},         {"nt", rc.nt},
                      {"L", rc.L},           {"T", rc.T},
                      {"profile", rc.profile},{"seed", rc.seed},
                      {"tol", rc.tol}};
    diag["det_A"] = {{"re", cfg.detA.real()}, {"im", cfg.detA.imag()},
                     {"abs", std::abs(cfg.detA)}};
    diag["rescale_factor"] = scale;
    diag["iterations"] = pd.iterations;
    diag["converged"] = pd.converged;
    diag["fixed_point_residual"] = pd.fixed_point_residual;
    diag["diffs"] = pd.diffs;
    diag["contraction_ratios"] = pd.ratios;
    diag["plugback_dirichlet_abs"] = plug_f;
    diag["plugback_neumann_abs"] = plug_g;
    diag["data_sup_f"] = fscale;
    diag["data_sup_g"] = gscale;
    if (rc.lambda_nl == 0.0) diag["mass_balance_residual"] = solver::mass_balance(u, grid.T);
    diag["z_proxy"] = solver::z_proxy(u, rc.s, rc.b);
    diag["warnings"] = diag::drain_warnings();

    std::ofstream(fs::path(rc.out) / "diagnostics.json") << diag.dump(2) << '\n';
    std::cout << "solve: " << (pd.converged ? "converged" : "not converged") << " in "
              << pd.iterations << " iterations; artifacts in " << rc.out << "\n";
    return pd.converged ? 0 : 3;
}

int run_verify(const RunConfig& rc) {
    verify::Options opts;
    opts.seed = rc.seed;
    auto items = verify::run_all(opts, [](const verify::Item& it) {
        std::printf("%-28s %s  measured=%.3e  threshold=%.3e\n", it.name.c_str(),
                    it.pass ? "PASS" : "FAIL", it.measured, it.threshold);
        std::fflush(stdout);
    });
    json rep = json::array();
    for (const auto& it : items)
        rep.push_back({{"name", it.name},
                       {"pass", it.pass},
                       {"measured", it.measured},
                       {"threshold", it.threshold},
                       {"details", it.details}});
    json doc;
    doc["items"] = rep;
    doc["all_pass"] = verify::all_pass(items);
    doc["seed"] = rc.seed;
    std::ofstream(fs::path(rc.out) / "verify_report.json") << doc.dump(2) << '\n';
    if (!verify::all_pass(items)) {
        std::cout << "verification FAILED\n";
        return 4;
    }
    std::cout << "verification passed\n";
    return 0;
}

int run_bench(const RunConfig& rc) {
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    std::ofstream out(fs::path(rc.out) / "bench.txt");
    auto report = [&](const std::string& name, double v) {
        std::printf("%-36s %10.2f ms\n", name.c_str(), v);
        out << name << "," << v << "\n";
    };

    auto t0 = clock::now();
    auto table = osc::KernelTable::build();
    auto t1 = clock::now();
    report("kernel_B tabulation", ms(t0, t1));

    GridSpec g{rc.L, rc.nx, rc.T, rc.nt};
    GridSpec g2{rc.L, rc.nx * 2, rc.T, rc.nt};
    TimeSignal f = TimeSignal::zeros(g.nt, g.dt());
    for (std::size_t n = 0; n < g.nt; ++n) {
        double t = g.t(n);
        f.samples[n] = (t > 0 && t < 1) ? std::pow(std::sin(kPi * t), 4) : 0.0;
    }
    t0 = clock::now();
    auto L0 = forcing::forcing_L0(f, g);
    t1 = clock::now();
    double base = ms(t0, t1);
    report("forcing_L0 (nx)", base);
    t0 = clock::now();
    auto L0b = forcing::forcing_L0(f, g2);
    t1 = clock::now();
    report("forcing_L0 (2nx)", ms(t0, t1));

    Field w(g);
    for (std::size_t i = 0; i < w.data.size(); ++i) w.data[i] = L0.data[i];
    t0 = clock::now();
    auto D1 = prop::duhamel_D(w, -1.0, true);
    t1 = clock::now();
    report("duhamel_D fast path (nt)", ms(t0, t1));
    t0 = clock::now();
    auto D2 = prop::duhamel_D(w, -1.0, false);
    t1 = clock::now();
    report("duhamel_D naive (nt, t x t' loop)", ms(t0, t1));
    GridSpec gt{rc.L, rc.nx, rc.T, (rc.nt - 1) * 2 + 1};
    Field w2(gt);
    t0 = clock::now();
    auto D3 = prop::duhamel_D(w2, -1.0, false);
    t1 = clock::now();
    report("duhamel_D naive (2nt)", ms(t0, t1));

    auto data = profiles::gaussian_pulse(g);
    auto cfg = solver::build_forcing_config(rc.lambda1, rc.lambda2, rc.s, rc.b);
    solver::SolveParams p;
    p.s = rc.s;
    p.b = rc.b;
    p.lambda_nl = 1.0;
    Field ustate(g);
    t0 = clock::now();
    auto lam1 = solver::apply_Lambda(ustate, data, cfg, p, g);
    t1 = clock::now();
    report("apply_Lambda (one application)", ms(t0, t1));

    p.delta_target = 0.05;
    solver::rescale_data(data, p.s, p.delta_target);
    t0 = clock::now();
    auto [u, pd] = solver::picard_solve(data, cfg, p, g);
    t1 = clock::now();
    report("picard_solve (" + std::to_string(pd.iterations) + " iterations)", ms(t0, t1));
    (void)table;
    (void)L0b;
    (void)D1;
    (void)D2;
    (void)D3;
    (void)lam1;
    (void)u;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"half-line biharmonic NLS toolkit"};
    RunConfig rc;
    app.add_option("--mode", rc.mode, "solve | verify | bench")->required();
    app.add_option("--s", rc.s, "Sobolev regularity, in [0, 1/2)");
    app.add_option("--b", rc.b, "Bourgain exponent, < 1/2");
    app.add_option("--lambda1", rc.lambda1, "first forcing order");
    app.add_option("--lambda2", rc.lambda2, "second forcing order");
    app.add_option("--lambda-nl", rc.lambda_nl, "cubic nonlinearity coefficient");
    app.add_option("--nx", rc.nx, "spatial samples (power of two)");
    app.add_option("--nt", rc.nt, "time samples");
    app.add_option("--L", rc.L, "spatial half-width");
    app.add_option("--T", rc.T, "time horizon");
    app.add_option("--profile", rc.profile,
                   "zero | gaussian-pulse | modulated-ramp | manufactured-linear");
    app.add_option("--data-dir", rc.data_dir, "directory with f.csv, g.csv, u0.csv");
    app.add_option("--out", rc.out, "output directory");
    app.add_option("--seed", rc.seed, "random seed for ensembles");
    app.add_option("--tol", rc.tol, "iteration tolerance");
    app.add_option("--delta-target", rc.delta_target, "optional data rescale amplitude");
    CLI11_PARSE(app, argc, argv);

    try {
        if (rc.mode != "solve" && rc.mode != "verify" && rc.mode != "bench")
            throw config_error("unknown mode: " + rc.mode);
        DirLock lock{fs::path(rc.out)};
        diag::clear_warnings();
        if (rc.mode == "solve") return run_solve(rc);
        if (rc.mode == "verify") return run_verify(rc);
        return run_bench(rc);
    } catch (const contraction_error& e) {
        json err = {{"error", "contraction_failure"}, {"message", e.what()}};
        std::ofstream(fs::path(rc.out) / "error.json") << err.dump(2) << '\n';
        std::cerr << "contraction failure: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        json err = {{"error", "config"}, {"message", e.what()}};
        std::ofstream(fs::path(rc.out) / "error.json") << err.dump(2) << '\n';
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err = {{"error", "runtime"}, {"message", e.what()}};
        std::ofstream(fs::path(rc.out) / "error.json") << err.dump(2) << '\n';
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
