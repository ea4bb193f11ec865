#pragma once

#include <vector>

#include "hodgemhd/duhamel.hpp"
#include "hodgemhd/nonlinear.hpp"
#include "hodgemhd/trajectory.hpp"

namespace hodgemhd {

/// One bilinear Duhamel operator applied to node trajectories, together with
/// the measured boundedness ratio ||output|| / (||input1|| ||input2||) in the
/// appropriate critical norms. The ratios realize the boundedness constants
/// of the three convolution lemmas as measured quantities.
struct BilinearResult {
    std::vector<SpectralFormField> nodes;
    double out_norm = 0.0;
    double in_norm_product = 0.0;
    double ratio = 0.0; // out_norm / in_norm_product, 0 when inputs vanish
};

namespace detail {
inline void fill_ratio(BilinearResult& r) {
    r.ratio = r.in_norm_product > 0.0 ? r.out_norm / r.in_norm_product : 0.0;
}
} // namespace detail

/// B1(u1,u2) = -S * P((u1 . grad) u2): U_T x U_T -> U_T.
inline BilinearResult b1_convection(const std::vector<SpectralFormField>& u1,
                                    const std::vector<SpectralFormField>& u2,
                                    const GradedMesh& mesh, double fraction) {
    const TorusGrid& g = u1.at(1).grid();
    std::vector<SpectralFormField> sources;
    sources.reserve(mesh.M + 1);
    sources.push_back(SpectralFormField::zeros(g, 1));
    for (int j = 1; j <= mesh.M; ++j)
        sources.push_back(nonlin_convection(u1[j], u2[j], fraction));
    BilinearResult r;
    r.nodes = duhamel_all(SemigroupKind::Stokes, sources, mesh);
    for (auto& w : r.nodes) w *= -1.0;
    r.out_norm = u_space_norm(mesh, r.nodes);
    r.in_norm_product = u_space_norm(mesh, u1) * u_space_norm(mesh, u2);
    detail::fill_ratio(r);
    return r;
}

/// B2(b1,b2) = +S * P((delta b1) ⌟ b2): B_T x B_T -> U_T.
inline BilinearResult b2_lorentz(const std::vector<SpectralFormField>& b1,
                                 const std::vector<SpectralFormField>& b2,
                                 const GradedMesh& mesh, double fraction) {
    const TorusGrid& g = b1.at(1).grid();
    std::vector<SpectralFormField> sources;
    sources.reserve(mesh.M + 1);
    sources.push_back(SpectralFormField::zeros(g, 1));
    for (int j = 1; j <= mesh.M; ++j)
        sources.push_back(nonlin_lorentz(b1[j], b2[j], fraction));
    BilinearResult r;
    r.nodes = duhamel_all(SemigroupKind::Stokes, sources, mesh);
    r.out_norm = u_space_norm(mesh, r.nodes);
    r.in_norm_product = b_space_norm(mesh, b1) * b_space_norm(mesh, b2);
    detail::fill_ratio(r);
    return r;
}

/// B3(u,b) = +M * Q(d(u ⌟ b)): U_T x B_T -> B_T.
inline BilinearResult b3_induction(const std::vector<SpectralFormField>& u,
                                   const std::vector<SpectralFormField>& b,
                                   const GradedMesh& mesh, double fraction) {
    const TorusGrid& g = u.at(1).grid();
    std::vector<SpectralFormField> sources;
    sources.reserve(mesh.M + 1);
    sources.push_back(SpectralFormField::zeros(g, 2));
    for (int j = 1; j <= mesh.M; ++j)
        sources.push_back(nonlin_induction(u[j], b[j], fraction));
    BilinearResult r;
    r.nodes = duhamel_all(SemigroupKind::Maxwell, sources, mesh);
    r.out_norm = b_space_norm(mesh, r.nodes);
    r.in_norm_product = u_space_norm(mesh, u) * b_space_norm(mesh, b);
    detail::fill_ratio(r);
    return r;
}

} // namespace hodgemhd
