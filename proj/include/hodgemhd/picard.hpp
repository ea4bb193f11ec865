#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hodgemhd/duhamel.hpp"
#include "hodgemhd/nonlinear.hpp"
#include "hodgemhd/trajectory.hpp"

namespace hodgemhd {

/// The Picard map failed to contract (distance grew three iterations in a
/// row). Smaller data or a smaller horizon T is the standard way out.
class NonContractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    int n = 3;
    int N = 32;
    double L = 2.0 * 3.14159265358979323846;
    double T = 1.0;
    int M = 128;               // time mesh nodes
    double grading = 2.0;      // graded-mesh exponent
    double dealias = 2.0 / 3.0;
    double tol = 1e-9;         // Picard stopping tolerance in the X_T norm
    int max_iter = 25;
    std::uint64_t seed = 0;
    double damping = 1.0;      // 1 = pure Picard iteration
    int dual_path_stride = 16; // node stride of the induction consistency check; 0 = off
    double dual_path_tol = 1e-8;
    bool linear_only = false;  // skip the nonlinearity (semigroup evolution only)

    TorusGrid grid() const { return TorusGrid(n, N, L); }
    GradedMesh mesh() const { return GradedMesh(T, M, grading); }

    void validate() const {
        TorusGrid g(n, N, L); // throws on bad n/N/L
        (void)g;
        if (!(T > 0.0)) throw std::invalid_argument("SolverConfig: T must be positive");
        if (M < 2) throw std::invalid_argument("SolverConfig: M must be >= 2");
        if (!(grading >= 1.0)) throw std::invalid_argument("SolverConfig: grading must be >= 1");
        if (!(dealias > 0.0) || dealias > 1.0)
            throw std::invalid_argument("SolverConfig: dealias fraction must be in (0,1]");
        if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be positive");
        if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
        if (!(damping > 0.0) || damping > 1.0)
            throw std::invalid_argument("SolverConfig: damping must be in (0,1]");
        if (dual_path_stride < 0)
            throw std::invalid_argument("SolverConfig: dual_path_stride must be >= 0");
    }
};

struct IterationRecord {
    int iteration = 0;
    double distance = 0.0;         // X_T distance of successive iterates
    double ratio = 0.0;            // distance / previous distance (0 on the first)
    double db_monitor = 0.0;       // max ||d b||_inf over nodes
    double dual_path_defect = 0.0; // worst induction dual-route defect this sweep
};

struct MeasuredConstants {
    double c1 = 0.0;      // ||B1(u,u)||_U / ||u||_U^2
    double c2 = 0.0;      // ||B2(b,b)||_U / ||b||_B^2
    double c3 = 0.0;      // ||B3(u,b)||_B / (||u||_U ||b||_B)
    double c_total = 0.0; // ||Phi(U,U)||_X / ||U||_X^2
};

struct PicardResult {
    MildTrajectory trajectory;
    std::vector<IterationRecord> log;
    CriticalNorms initial_norms; // of the semigroup-evolved data U^0
    CriticalNorms final_norms;
    MeasuredConstants constants; // measured on the first iteration
    bool converged = false;
    int iterations = 0;
    double final_residual = 0.0;
};

namespace detail {

/// Weighted-sup accumulator for one (1-form, 2-form) node stream.
struct NormAccumulator {
    double n = 3.0;
    CriticalNorms norms;

    void add_u(double t, const SpectralFormField& u) {
        norms.sup_u_2n = std::max(norms.sup_u_2n, std::pow(t, 0.25) * u.lp_norm(2.0 * n));
        norms.sup_grad_u_n =
            std::max(norms.sup_grad_u_n, std::sqrt(t) * gradient_lp_norm(u, n));
    }
    void add_b(double t, const SpectralFormField& b) {
        norms.sup_b_2n = std::max(norms.sup_b_2n, std::pow(t, 0.25) * b.lp_norm(2.0 * n));
        norms.sup_delta_b_n =
            std::max(norms.sup_delta_b_n, std::sqrt(t) * delta_spec(b).lp_norm(n));
    }
};

/// Critical norm of the free semigroup evolution of projected data, without
/// materializing the trajectory.
inline CriticalNorms free_evolution_norms(const SpectralFormField& u0p,
                                          const SpectralFormField& b0p,
                                          const GradedMesh& mesh) {
    NormAccumulator acc;
    acc.n = double(u0p.grid().n);
    for (int j = 1; j <= mesh.M; ++j) {
        const double t = mesh.nodes[j];
        acc.add_u(t, heat_semigroup(t, u0p));
        acc.add_b(t, heat_semigroup(t, b0p));
    }
    return acc.norms;
}

} // namespace detail

/// Mild-solution Picard iteration
///   U^{m+1} = U^0 + (B1(u,u) + B2(b,b), B3(u,b)),
/// with B1 = -S*P((u.grad)u), B2 = +S*P((delta b) ⌟ b), B3 = +M*Q(d(u ⌟ b)).
/// Initial data are projected (Leray / exact range) and dealiased on
/// ingestion; every iterate then keeps those constraints to roundoff.
inline PicardResult picard_solve(const SpectralFormField& u0, const SpectralFormField& b0,
                                 const SolverConfig& cfg) {
    cfg.validate();
    const TorusGrid grid = cfg.grid();
    if (u0.grid() != grid || b0.grid() != grid)
        throw std::invalid_argument("picard_solve: data grid does not match config");
    if (u0.grade() != 1 || b0.grade() != 2)
        throw std::invalid_argument("picard_solve: expects 1-form u0 and 2-form b0");

    SpectralFormField u0p = leray_project(u0);
    SpectralFormField b0p = exact_project(b0);
    dealias_inplace(u0p, cfg.dealias);
    dealias_inplace(b0p, cfg.dealias);

    const GradedMesh mesh = cfg.mesh();
    const double n = double(grid.n);

    PicardResult result;
    result.initial_norms = detail::free_evolution_norms(u0p, b0p, mesh);

    // U^0: the free evolution, also the first iterate.
    MildTrajectory current;
    current.mesh = mesh;
    for (int j = 0; j <= mesh.M; ++j) {
        current.u.push_back(heat_semigroup(mesh.nodes[j], u0p));
        current.b.push_back(heat_semigroup(mesh.nodes[j], b0p));
    }

    if (cfg.linear_only) {
        result.trajectory = std::move(current);
        result.final_norms = result.initial_norms;
        result.converged = true;
        return result;
    }

    double prev_distance = -1.0;
    int growth_streak = 0;

    for (int it = 1; it <= cfg.max_iter; ++it) {
        DuhamelAccumulator conv_acc(grid, 1, mesh, SingularWeight::ThreeQuarters);
        DuhamelAccumulator lor_acc(grid, 1, mesh, SingularWeight::ThreeQuarters);
        DuhamelAccumulator ind_acc(grid, 2, mesh, SingularWeight::ThreeQuarters);

        MildTrajectory next;
        next.mesh = mesh;
        next.u.push_back(current.u[0]);
        next.b.push_back(current.b[0]);

        // Norm accumulators for the measured bilinear constants (first sweep).
        const bool measure = it == 1;
        detail::NormAccumulator acc_b1, acc_b2, acc_b3, acc_phi;
        acc_b1.n = acc_b2.n = acc_b3.n = acc_phi.n = n;

        double worst_defect = 0.0;
        for (int j = 1; j <= mesh.M; ++j) {
            const double t = mesh.nodes[j];
            const SpectralFormField conv =
                leray_project(nonlin_convection(current.u[j], cfg.dealias));
            const SpectralFormField lor =
                leray_project(nonlin_lorentz(current.b[j], cfg.dealias));
            const SpectralFormField ind =
                exact_project(nonlin_induction(current.u[j], current.b[j], cfg.dealias));

            if (cfg.dual_path_stride > 0 && (j % cfg.dual_path_stride == 0)) {
                const double defect =
                    induction_dual_path_defect(current.u[j], current.b[j], cfg.dealias);
                worst_defect = std::max(worst_defect, defect);
                if (defect > cfg.dual_path_tol)
                    throw ConsistencyError(
                        "nonlin_induction: dual-route defect " + std::to_string(defect) +
                        " exceeds tolerance at node " + std::to_string(j));
            }

            const SpectralFormField& cduh = conv_acc.advance(conv);
            const SpectralFormField& lduh = lor_acc.advance(lor);
            const SpectralFormField& iduh = ind_acc.advance(ind);

            if (measure) {
                acc_b1.add_u(t, cduh); // ||-w|| = ||w||
                acc_b2.add_u(t, lduh);
                acc_b3.add_b(t, iduh);
                SpectralFormField phi_u = lduh;
                phi_u -= cduh;
                acc_phi.add_u(t, phi_u);
                acc_phi.add_b(t, iduh);
            }

            SpectralFormField nu = heat_semigroup(t, u0p);
            nu -= cduh; // B1 carries the minus sign
            nu += lduh;
            SpectralFormField nb = heat_semigroup(t, b0p);
            nb += iduh;

            if (cfg.damping < 1.0) {
                nu *= cfg.damping;
                nb *= cfg.damping;
                SpectralFormField ou = current.u[j];
                ou *= 1.0 - cfg.damping;
                SpectralFormField ob = current.b[j];
                ob *= 1.0 - cfg.damping;
                nu += ou;
                nb += ob;
            }
            next.u.push_back(std::move(nu));
            next.b.push_back(std::move(nb));
        }

        if (measure) {
            const double uu = result.initial_norms.u_space();
            const double bb = result.initial_norms.b_space();
            const double xx = result.initial_norms.xt();
            MeasuredConstants c;
            if (uu > 0.0) c.c1 = acc_b1.norms.u_space() / (uu * uu);
            if (bb > 0.0) c.c2 = acc_b2.norms.u_space() / (bb * bb);
            if (uu > 0.0 && bb > 0.0) c.c3 = acc_b3.norms.b_space() / (uu * bb);
            if (xx > 0.0) c.c_total = acc_phi.norms.xt() / (xx * xx);
            result.constants = c;
        }

        IterationRecord rec;
        rec.iteration = it;
        rec.distance = xt_distance(next, current);
        rec.ratio = prev_distance > 0.0 ? rec.distance / prev_distance : 0.0;
        rec.db_monitor = db_monitor(next);
        rec.dual_path_defect = worst_defect;
        result.log.push_back(rec);

        current = std::move(next);
        result.iterations = it;
        result.final_residual = rec.distance;

        if (rec.distance < cfg.tol) {
            result.converged = true;
            break;
        }
        if (prev_distance > 0.0 && rec.distance > prev_distance) {
            if (++growth_streak >= 3)
                throw NonContractionError(
                    "picard_solve: distance grew for 3 consecutive iterations (last " +
                    std::to_string(rec.distance) +
                    "); try smaller data or a smaller horizon T");
        } else {
            growth_streak = 0;
        }
        prev_distance = rec.distance;
    }

    result.trajectory = std::move(current);
    result.final_norms = critical_norms(result.trajectory);
    return result;
}

/// Horizon search: halves T until the free evolution of the data has
/// critical norm at most eps. Returns the horizon and the (T, norm) trace.
struct TSearchResult {
    double T = 0.0;
    std::vector<std::pair<double, double>> trace; // (T, measured norm)
};

inline TSearchResult local_T_search(const SpectralFormField& u0, const SpectralFormField& b0,
                                    const SolverConfig& cfg, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("local_T_search: eps must be positive");
    SpectralFormField u0p = leray_project(u0);
    SpectralFormField b0p = exact_project(b0);
    dealias_inplace(u0p, cfg.dealias);
    dealias_inplace(b0p, cfg.dealias);

    TSearchResult out;
    double T = cfg.T;
    for (int halvings = 0; halvings < 200; ++halvings) {
        const GradedMesh mesh(T, cfg.M, cfg.grading);
        if (mesh.nodes[1] < 1e-14)
            throw std::runtime_error(
                "local_T_search: horizon underflow, first node below mesh resolution at T = " +
                std::to_string(T));
        const double norm = detail::free_evolution_norms(u0p, b0p, mesh).xt();
        out.trace.emplace_back(T, norm);
        if (norm <= eps) {
            out.T = T;
            return out;
        }
        T *= 0.5;
    }
    throw std::runtime_error("local_T_search: eps not reached after 200 halvings");
}

/// Scaling covariance: solves on the original torus and on the lambda-rescaled
/// torus with data lambda u0(lambda x), then compares node by node. The graded
/// mesh and the integer mode indices are scale-covariant, so matched nodes and
/// matched grid points compare directly.
struct ScalingCheckResult {
    double lambda = 1.0;
    std::vector<double> times;    // rescaled-run node times
    std::vector<double> defect_u; // relative L^2 defects per node
    std::vector<double> defect_b;
    double max_defect = 0.0;
};

inline SpectralFormField transplant_scaled(const SpectralFormField& w, const TorusGrid& to,
                                           double lambda) {
    SpectralFormField out(to, w.grade());
    for (std::size_t b = 0; b < w.blade_count(); ++b)
        for (std::size_t m = 0; m < w.grid().modes(); ++m) out.hat(b)[m] = lambda * w.hat(b)[m];
    return out;
}

inline ScalingCheckResult scaling_check(const SpectralFormField& u0,
                                        const SpectralFormField& b0, double lambda,
                                        const SolverConfig& cfg) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scaling_check: lambda must be positive");
    cfg.validate();

    const PicardResult run1 = picard_solve(u0, b0, cfg);

    SolverConfig cfg2 = cfg;
    cfg2.L = cfg.L / lambda;
    cfg2.T = cfg.T / (lambda * lambda);
    const TorusGrid grid2 = cfg2.grid();
    // u_lambda(0, x) = lambda u0(lambda x): same integer modes, amplitude scaled
    const SpectralFormField u0s = transplant_scaled(u0, grid2, lambda);
    const SpectralFormField b0s = transplant_scaled(b0, grid2, lambda);
    const PicardResult run2 = picard_solve(u0s, b0s, cfg2);

    ScalingCheckResult out;
    out.lambda = lambda;
    auto defect = [&](const SpectralFormField& coarse, const SpectralFormField& fine) {
        SpectralFormField want = transplant_scaled(coarse, grid2, lambda);
        SpectralFormField diff = fine;
        diff -= want;
        const double denom = want.l2_norm_spectral();
        return denom > 0.0 ? diff.l2_norm_spectral() / denom : diff.l2_norm_spectral();
    };
    for (int j = 0; j <= cfg.M; ++j) {
        out.times.push_back(run2.trajectory.mesh.nodes[j]);
        out.defect_u.push_back(defect(run1.trajectory.u[j], run2.trajectory.u[j]));
        out.defect_b.push_back(defect(run1.trajectory.b[j], run2.trajectory.b[j]));
        out.max_defect =
            std::max({out.max_defect, out.defect_u.back(), out.defect_b.back()});
    }
    return out;
}

} // namespace hodgemhd
