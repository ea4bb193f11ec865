#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "hodgemhd/spectral_ops.hpp"
#include "hodgemhd/time_mesh.hpp"

namespace hodgemhd {

/// Time-gridded mild solution pair: u (1-form) and b (2-form) at every node
/// of a graded mesh. Node 0 holds the initial data.
struct MildTrajectory {
    GradedMesh mesh;
    std::vector<SpectralFormField> u;
    std::vector<SpectralFormField> b;
};

/// The four weighted sups making up the critical-space norm:
/// sup t^{1/4} ||u||_{2n},  sup t^{1/2} ||grad u||_n,
/// sup t^{1/4} ||b||_{2n},  sup t^{1/2} ||delta b||_n.
/// Sups run over mesh nodes j >= 1 (the weights vanish at t = 0).
struct CriticalNorms {
    double sup_u_2n = 0.0;
    double sup_grad_u_n = 0.0;
    double sup_b_2n = 0.0;
    double sup_delta_b_n = 0.0;

    double u_space() const { return sup_u_2n + sup_grad_u_n; }
    double b_space() const { return sup_b_2n + sup_delta_b_n; }
    double xt() const { return u_space() + b_space(); }
};

/// 𝒰_T-type norm of a 1-form node sequence.
inline double u_space_norm(const GradedMesh& mesh, const std::vector<SpectralFormField>& u) {
    const double n = double(u.at(1).grid().n);
    double s1 = 0.0, s2 = 0.0;
    for (int j = 1; j <= mesh.M; ++j) {
        const double t = mesh.nodes[j];
        s1 = std::max(s1, std::pow(t, 0.25) * u[j].lp_norm(2.0 * n));
        s2 = std::max(s2, std::sqrt(t) * gradient_lp_norm(u[j], n));
    }
    return s1 + s2;
}

/// ℬ_T-type norm of a 2-form node sequence.
inline double b_space_norm(const GradedMesh& mesh, const std::vector<SpectralFormField>& b) {
    const double n = double(b.at(1).grid().n);
    double s1 = 0.0, s2 = 0.0;
    for (int j = 1; j <= mesh.M; ++j) {
        const double t = mesh.nodes[j];
        s1 = std::max(s1, std::pow(t, 0.25) * b[j].lp_norm(2.0 * n));
        s2 = std::max(s2, std::sqrt(t) * delta_spec(b[j]).lp_norm(n));
    }
    return s1 + s2;
}

inline CriticalNorms critical_norms(const MildTrajectory& traj) {
    CriticalNorms out;
    const double n = double(traj.u.at(1).grid().n);
    for (int j = 1; j <= traj.mesh.M; ++j) {
        const double t = traj.mesh.nodes[j];
        out.sup_u_2n = std::max(out.sup_u_2n, std::pow(t, 0.25) * traj.u[j].lp_norm(2.0 * n));
        out.sup_grad_u_n =
            std::max(out.sup_grad_u_n, std::sqrt(t) * gradient_lp_norm(traj.u[j], n));
        out.sup_b_2n = std::max(out.sup_b_2n, std::pow(t, 0.25) * traj.b[j].lp_norm(2.0 * n));
        out.sup_delta_b_n =
            std::max(out.sup_delta_b_n, std::sqrt(t) * delta_spec(traj.b[j]).lp_norm(n));
    }
    return out;
}

/// Critical-space distance between two trajectories on the same mesh.
inline double xt_distance(const MildTrajectory& a, const MildTrajectory& p) {
    CriticalNorms out;
    const double n = double(a.u.at(1).grid().n);
    for (int j = 1; j <= a.mesh.M; ++j) {
        const double t = a.mesh.nodes[j];
        SpectralFormField du = a.u[j];
        du -= p.u[j];
        SpectralFormField db = a.b[j];
        db -= p.b[j];
        out.sup_u_2n = std::max(out.sup_u_2n, std::pow(t, 0.25) * du.lp_norm(2.0 * n));
        out.sup_grad_u_n = std::max(out.sup_grad_u_n, std::sqrt(t) * gradient_lp_norm(du, n));
        out.sup_b_2n = std::max(out.sup_b_2n, std::pow(t, 0.25) * db.lp_norm(2.0 * n));
        out.sup_delta_b_n =
            std::max(out.sup_delta_b_n, std::sqrt(t) * delta_spec(db).lp_norm(n));
    }
    return out.xt();
}

/// Max over nodes of ||d b(t_j)||_inf: the db = 0 propagation monitor.
inline double db_monitor(const MildTrajectory& traj) {
    const double inf = std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (int j = 0; j <= traj.mesh.M; ++j)
        worst = std::max(worst, d_spec(traj.b[j]).lp_norm(inf));
    return worst;
}

/// Structure monitors of the mild formulation: worst relative divergence of
/// u and worst relative distance of b from the exact range over all nodes.
struct StructureReport {
    double max_div_u_rel = 0.0;
    double max_b_offrange_rel = 0.0;
};

inline StructureReport structure_monitor(const MildTrajectory& traj) {
    StructureReport rep;
    for (int j = 0; j <= traj.mesh.M; ++j) {
        const double un = traj.u[j].l2_norm_spectral();
        if (un > 0.0)
            rep.max_div_u_rel =
                std::max(rep.max_div_u_rel, delta_spec(traj.u[j]).l2_norm_spectral() / un);
        const double bn = traj.b[j].l2_norm_spectral();
        if (bn > 0.0) {
            SpectralFormField off = traj.b[j];
            off -= exact_project(traj.b[j]);
            rep.max_b_offrange_rel =
                std::max(rep.max_b_offrange_rel, off.l2_norm_spectral() / bn);
        }
    }
    return rep;
}

} // namespace hodgemhd
