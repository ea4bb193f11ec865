// Command-line front end: identity verification, mild-solution simulation,
// semigroup decay diagnostics, and the scaling covariance check.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hodgemhd/csv.hpp"
#include "hodgemhd/decay.hpp"
#include "hodgemhd/identity_suite.hpp"
#include "hodgemhd/manifest.hpp"
#include "hodgemhd/picard.hpp"
#include "hodgemhd/presets.hpp"

namespace fs = std::filesystem;
using namespace hodgemhd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;       // identity failures / consistency errors
constexpr int kExitNonContraction = 2;
constexpr int kExitUsage = 64;

struct Options {
    // shared
    std::string out = "out";
    std::uint64_t seed = 0;
    int n = 3;
    int grid = 32;
    double period = 2.0 * 3.14159265358979323846;
    double horizon = 1.0;
    int mesh_nodes = 128;
    double grading = 2.0;
    double dealias = 2.0 / 3.0;
    double tol = 1e-9;
    int max_iter = 25;
    std::string preset = "taylor-green";
    double amplitude_u = 0.25;
    double amplitude_b = 0.2;
    double damping = 1.0;
    int dual_stride = 16;

    // verify-identities
    int trials = 100;
    int degree = 3;
    int identity_grid = 16;
    std::string mutate;

    // simulate
    double epsilon = 0.0; // 0 = keep the configured horizon
    std::string u0_file;
    std::string b0_file;
    bool no_fields = false;
    bool csv_fields = false;

    // decay
    std::string triples; // "p,alpha[,q];..."; empty = the built-in set
    double t_min = 1e-3;
    double t_max = 1.0;
    int t_points = 25;

    // scaling-check
    double lambda = 2.0;
    bool linear_only = false;

    SolverConfig solver_config() const {
        SolverConfig cfg;
        cfg.n = n;
        cfg.N = grid;
        cfg.L = period;
        cfg.T = horizon;
        cfg.M = mesh_nodes;
        cfg.grading = grading;
        cfg.dealias = dealias;
        cfg.tol = tol;
        cfg.max_iter = max_iter;
        cfg.seed = seed;
        cfg.damping = damping;
        cfg.dual_path_stride = dual_stride;
        cfg.linear_only = linear_only;
        return cfg;
    }

    std::string echo(const std::string& command) const {
        std::ostringstream os;
        os << "command = " << command << "\n"
           << "n = " << n << "\n"
           << "grid = " << grid << "\n"
           << "period = " << csv::num(period) << "\n"
           << "horizon = " << csv::num(horizon) << "\n"
           << "mesh_nodes = " << mesh_nodes << "\n"
           << "grading = " << csv::num(grading) << "\n"
           << "dealias = " << csv::num(dealias) << "\n"
           << "tol = " << csv::num(tol) << "\n"
           << "max_iter = " << max_iter << "\n"
           << "seed = " << seed << "\n"
           << "preset = " << preset << "\n"
           << "amplitude_u = " << csv::num(amplitude_u) << "\n"
           << "amplitude_b = " << csv::num(amplitude_b) << "\n"
           << "damping = " << csv::num(damping) << "\n"
           << "dual_stride = " << dual_stride << "\n"
           << "trials = " << trials << "\n"
           << "degree = " << degree << "\n"
           << "identity_grid = " << identity_grid << "\n"
           << "mutate = " << mutate << "\n"
           << "epsilon = " << csv::num(epsilon) << "\n"
           << "u0_file = " << u0_file << "\n"
           << "b0_file = " << b0_file << "\n"
           << "triples = " << triples << "\n"
           << "t_min = " << csv::num(t_min) << "\n"
           << "t_max = " << csv::num(t_max) << "\n"
           << "t_points = " << t_points << "\n"
           << "lambda = " << csv::num(lambda) << "\n"
           << "linear_only = " << (linear_only ? 1 : 0) << "\n";
        return os.str();
    }
};

RunManifest start_manifest(const Options& opt, const std::string& command) {
    fs::create_directories(opt.out);
    RunManifest m;
    m.command = command;
    m.config_echo = opt.echo(command);
    m.seed = opt.seed;
    m.started = RunManifest::now_iso8601();
    return m;
}

void finish_manifest(RunManifest& m, const Options& opt) {
    m.finished = RunManifest::now_iso8601();
    const std::string path = (fs::path(opt.out) / "manifest.json").string();
    m.write(path);
}

InitialData load_initial_data(const Options& opt, const TorusGrid& grid) {
    InitialData data = make_preset(opt.preset, grid, opt.amplitude_u, opt.amplitude_b);
    if (!opt.u0_file.empty()) {
        data.u0 = SpectralFormField::load_binary(opt.u0_file);
        if (data.u0.grid() != grid || data.u0.grade() != 1)
            throw std::invalid_argument("u0 file does not match the configured grid");
    }
    if (!opt.b0_file.empty()) {
        data.b0 = SpectralFormField::load_binary(opt.b0_file);
        if (data.b0.grid() != grid || data.b0.grade() != 2)
            throw std::invalid_argument("b0 file does not match the configured grid");
    }
    return data;
}

int cmd_verify_identities(const Options& opt) {
    RunManifest manifest = start_manifest(opt, "verify-identities");

    IdentitySuiteConfig cfg;
    cfg.trials = opt.trials;
    cfg.degree = opt.degree;
    cfg.seed = opt.seed;
    cfg.spectral_N = opt.identity_grid;
    cfg.mutation = opt.mutate;
    const IdentityReport report = run_identity_suites(cfg);

    const fs::path dir(opt.out);
    {
        std::ofstream txt(dir / "verify_report.txt");
        txt << "identity suites: trials=" << opt.trials << " degree=" << opt.degree
            << " seed=" << opt.seed << "\n";
        for (const auto& s : report.suites)
            txt << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << "  checks=" << s.checks
                << " failures=" << s.failures << "  (" << s.note << ")\n";
        if (!report.counterexamples.empty()) {
            txt << "counterexamples:\n";
            for (const auto& ce : report.counterexamples) txt << "  " << ce << "\n";
        }
        txt << (report.ok() ? "ALL PASS" : "FAILED") << "\n";
    }
    {
        CsvWriter w((dir / "verify_report.csv").string(), "hodgemhd.verify.v1",
                    {"suite", "checks", "failures"});
        for (const auto& s : report.suites)
            w.write_row({s.name, csv::integer(s.checks), csv::integer(s.failures)});
    }
    manifest.artifacts = {"verify_report.txt", "verify_report.csv"};
    finish_manifest(manifest, opt);

    for (const auto& s : report.suites)
        std::cout << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << " (" << s.checks
                  << " checks)\n";
    for (const auto& ce : report.counterexamples) std::cout << "counterexample: " << ce << "\n";
    std::cout << (report.ok() ? "verify-identities: all suites passed"
                              : "verify-identities: FAILURES detected")
              << " [" << report.total_checks() << " checks]\n";
    return report.ok() ? kExitOk : kExitFailure;
}

int cmd_simulate(const Options& opt) {
    RunManifest manifest = start_manifest(opt, "simulate");
    SolverConfig cfg = opt.solver_config();
    cfg.validate();
    const TorusGrid grid = cfg.grid();
    const InitialData data = load_initial_data(opt, grid);
    const fs::path dir(opt.out);

    // horizon search first; with no target the configured horizon stands
    const double eps = opt.epsilon > 0.0 ? opt.epsilon : std::numeric_limits<double>::max();
    const TSearchResult ts = local_T_search(data.u0, data.b0, cfg, eps);
    cfg.T = ts.T;
    {
        CsvWriter w((dir / "tsearch.csv").string(), "hodgemhd.tsearch.v1",
                    {"horizon", "xt_norm"});
        for (const auto& [T, norm] : ts.trace) w.write_row({csv::num(T), csv::num(norm)});
    }

    const PicardResult res = picard_solve(data.u0, data.b0, cfg);

    {
        CsvWriter w((dir / "iterations.csv").string(), "hodgemhd.iteration.v1",
                    {"iteration", "xt_distance", "contraction_ratio", "db_monitor",
                     "dual_path_defect"});
        for (const auto& r : res.log)
            w.write_row({csv::integer(r.iteration), csv::num(r.distance), csv::num(r.ratio),
                         csv::num(r.db_monitor), csv::num(r.dual_path_defect)});
    }
    {
        CsvWriter w((dir / "critical_norms.csv").string(), "hodgemhd.criticalnorms.v1",
                    {"sup_u_2n", "sup_grad_u_n", "sup_b_2n", "sup_delta_b_n", "xt_norm"});
        const CriticalNorms& f = res.final_norms;
        w.write_row({csv::num(f.sup_u_2n), csv::num(f.sup_grad_u_n), csv::num(f.sup_b_2n),
                     csv::num(f.sup_delta_b_n), csv::num(f.xt())});
    }
    {
        CsvWriter w((dir / "constants.csv").string(), "hodgemhd.constants.v1",
                    {"c1", "c2", "c3", "c_total", "initial_xt", "iterations", "converged",
                     "final_residual", "horizon"});
        w.write_row({csv::num(res.constants.c1), csv::num(res.constants.c2),
                     csv::num(res.constants.c3), csv::num(res.constants.c_total),
                     csv::num(res.initial_norms.xt()), csv::integer(res.iterations),
                     csv::integer(res.converged ? 1 : 0), csv::num(res.final_residual),
                     csv::num(cfg.T)});
    }
    manifest.artifacts = {"tsearch.csv", "iterations.csv", "critical_norms.csv",
                          "constants.csv"};
    if (!opt.no_fields) {
        res.trajectory.u.front().save_binary((dir / "u_initial.field").string());
        res.trajectory.b.front().save_binary((dir / "b_initial.field").string());
        res.trajectory.u.back().save_binary((dir / "u_final.field").string());
        res.trajectory.b.back().save_binary((dir / "b_final.field").string());
        manifest.artifacts.insert(manifest.artifacts.end(),
                                  {"u_initial.field", "b_initial.field", "u_final.field",
                                   "b_final.field"});
    }
    if (opt.csv_fields) {
        std::ofstream uc(dir / "u_final.csv"), bc(dir / "b_final.csv");
        res.trajectory.u.back().write_csv(uc);
        res.trajectory.b.back().write_csv(bc);
        manifest.artifacts.insert(manifest.artifacts.end(), {"u_final.csv", "b_final.csv"});
    }
    finish_manifest(manifest, opt);

    std::cout << "simulate: horizon T = " << cfg.T << ", " << res.iterations
              << " iterations, residual " << res.final_residual
              << (res.converged ? " (converged)" : " (max iterations reached)") << "\n";
    std::cout << "measured constants: c1 = " << res.constants.c1
              << ", c2 = " << res.constants.c2 << ", c3 = " << res.constants.c3
              << ", c_total = " << res.constants.c_total << "\n";
    if (!res.log.empty())
        std::cout << "db monitor max = " << res.log.back().db_monitor << "\n";
    return res.converged ? kExitOk : kExitFailure;
}

std::vector<std::array<double, 3>> parse_triples(const Options& opt) {
    std::vector<std::array<double, 3>> out;
    const double n = double(opt.n);
    if (opt.triples.empty()) {
        out.push_back({n, 0.0, n}); // plain boundedness row
        out.push_back({n, 0.5, 2.0 * n});
        out.push_back({2.0 * n / 3.0, 1.0, 2.0 * n});
        out.push_back({2.0 * n / 3.0, 0.5, n});
        return out;
    }
    if (opt.triples == "none") return out;
    std::stringstream ss(opt.triples);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        std::stringstream fs_(item);
        std::string tok;
        std::vector<double> vals;
        while (std::getline(fs_, tok, ',')) vals.push_back(std::stod(tok));
        if (vals.size() < 2 || vals.size() > 3)
            throw std::invalid_argument("decay: triples must be 'p,alpha[,q]'");
        const double p = vals[0], alpha = vals[1];
        const double invq = 1.0 / p - alpha / n;
        if (!(invq > 0.0)) throw std::invalid_argument("decay: exponent relation gives q <= 0");
        const double q = vals.size() == 3 ? vals[2] : 1.0 / invq;
        out.push_back({p, alpha, q});
    }
    return out;
}

int cmd_decay(const Options& opt) {
    RunManifest manifest = start_manifest(opt, "decay");
    const TorusGrid grid(opt.n, opt.grid, opt.period);
    const auto triples = parse_triples(opt);

    std::vector<double> times;
    if (opt.t_points < 2) throw std::invalid_argument("decay: t_points must be >= 2");
    const double ratio = std::pow(opt.t_max / opt.t_min, 1.0 / (opt.t_points - 1));
    double t = opt.t_min;
    for (int i = 0; i < opt.t_points; ++i, t *= ratio) times.push_back(t);

    const SpectralFormField probe1 = bump_probe(grid, 1);
    const SpectralFormField probe2 = bump_probe(grid, 2);

    const fs::path dir(opt.out);
    CsvWriter w((dir / "decay.csv").string(), "hodgemhd.decay.v1",
                {"semigroup", "p", "alpha", "q", "t", "ratio", "grad_ratio"});
    for (const auto& [p, alpha, q] : triples) {
        for (SemigroupKind kind :
             {SemigroupKind::Heat, SemigroupKind::Stokes, SemigroupKind::Maxwell}) {
            const SpectralFormField& probe = kind == SemigroupKind::Maxwell ? probe2 : probe1;
            const DecayReport rep = decay_diagnostic(kind, probe, p, q, alpha, times);
            for (std::size_t i = 0; i < rep.times.size(); ++i)
                w.write_row({semigroup_name(kind), csv::num(p), csv::num(alpha), csv::num(q),
                             csv::num(rep.times[i]), csv::num(rep.ratio[i]),
                             csv::num(rep.grad_ratio[i])});
            std::cout << semigroup_name(kind) << " p=" << p << " alpha=" << alpha
                      << " q=" << q << ": sup ratio " << rep.sup_ratio() << ", sup grad ratio "
                      << rep.sup_grad_ratio() << "\n";
        }
    }
    w.close();
    manifest.artifacts = {"decay.csv"};
    finish_manifest(manifest, opt);
    return kExitOk;
}

int cmd_scaling_check(const Options& opt) {
    RunManifest manifest = start_manifest(opt, "scaling-check");
    SolverConfig cfg = opt.solver_config();
    cfg.validate();
    const TorusGrid grid = cfg.grid();
    const InitialData data = load_initial_data(opt, grid);

    const ScalingCheckResult r = scaling_check(data.u0, data.b0, opt.lambda, cfg);

    const fs::path dir(opt.out);
    CsvWriter w((dir / "scaling.csv").string(), "hodgemhd.scaling.v1",
                {"node", "t_rescaled", "defect_u", "defect_b"});
    for (std::size_t j = 0; j < r.times.size(); ++j)
        w.write_row({csv::integer(long(j)), csv::num(r.times[j]), csv::num(r.defect_u[j]),
                     csv::num(r.defect_b[j])});
    w.close();
    manifest.artifacts = {"scaling.csv"};
    finish_manifest(manifest, opt);

    std::cout << "scaling-check: lambda = " << r.lambda << ", max defect = " << r.max_defect
              << (opt.linear_only ? " (linear evolution)" : " (full nonlinear)") << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exterior-calculus MHD on the periodic torus"};
    app.fallthrough();
    Options opt;

    app.set_config("--config", "", "key = value configuration file; flags win");
    app.add_option("--out", opt.out, "output directory");
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--n", opt.n, "space dimension");
    app.add_option("--grid", opt.grid, "grid points per axis (power of two)");
    app.add_option("--period", opt.period, "torus period L");
    app.add_option("--horizon", opt.horizon, "time horizon T");
    app.add_option("--mesh-nodes", opt.mesh_nodes, "time mesh nodes M");
    app.add_option("--grading", opt.grading, "graded-mesh exponent");
    app.add_option("--dealias", opt.dealias, "dealiasing fraction");
    app.add_option("--tol", opt.tol, "Picard tolerance");
    app.add_option("--max-iter", opt.max_iter, "Picard iteration cap");
    app.add_option("--preset", opt.preset, "initial data preset name");
    app.add_option("--amplitude-u", opt.amplitude_u, "velocity amplitude");
    app.add_option("--amplitude-b", opt.amplitude_b, "magnetic amplitude");
    app.add_option("--damping", opt.damping, "Picard relaxation factor (1 = pure)");
    app.add_option("--dual-stride", opt.dual_stride,
                   "induction dual-route check stride (0 = off)");

    auto* verify = app.add_subcommand("verify-identities", "run the exact identity suites");
    verify->add_option("--trials", opt.trials, "trials per dimension");
    verify->add_option("--degree", opt.degree, "polynomial degree of random forms");
    verify->add_option("--identity-grid", opt.identity_grid, "grid for the spectral suite");
    verify->add_option("--mutate", opt.mutate, "fault-injection fixture name");

    auto* simulate = app.add_subcommand("simulate", "mild-solution Picard run");
    simulate->add_option("--epsilon", opt.epsilon,
                         "horizon-search target for the initial critical norm");
    simulate->add_option("--u0-file", opt.u0_file, "binary field snapshot for u0");
    simulate->add_option("--b0-file", opt.b0_file, "binary field snapshot for b0");
    simulate->add_flag("--no-fields", opt.no_fields, "skip field snapshots");
    simulate->add_flag("--csv-fields", opt.csv_fields, "also dump final fields as CSV");

    auto* decay = app.add_subcommand("decay", "semigroup smoothing diagnostics");
    decay->add_option("--triples", opt.triples, "semicolon list 'p,alpha[,q]' ('none' = empty)");
    decay->add_option("--t-min", opt.t_min, "smallest diagnostic time");
    decay->add_option("--t-max", opt.t_max, "largest diagnostic time");
    decay->add_option("--t-points", opt.t_points, "diagnostic time count");

    auto* scaling = app.add_subcommand("scaling-check", "scaling covariance of two solves");
    scaling->add_option("--lambda", opt.lambda, "rescaling factor");
    scaling->add_flag("--linear-only", opt.linear_only, "skip the nonlinearity");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify_identities(opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (decay->parsed()) return cmd_decay(opt);
        if (scaling->parsed()) return cmd_scaling_check(opt);
    } catch (const NonContractionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonContraction;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
