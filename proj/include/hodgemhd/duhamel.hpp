#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hodgemhd/decay.hpp"
#include "hodgemhd/singular_kernel.hpp"
#include "hodgemhd/spectral_ops.hpp"
#include "hodgemhd/time_mesh.hpp"

namespace hodgemhd {

/// Weight the piecewise-held source is measured against. ThreeQuarters is
/// the production choice: the held value is the smooth part s^{3/4} g(s) and
/// the kernel is integrated exactly against s^{-3/4} on each cell.
enum class SingularWeight { None, ThreeQuarters };

/// Streaming product-integration of the Duhamel convolution
///   conv(t_m) = ∫_0^{t_m} e^{-(t_m - s) mu} g(s) ds   per frequency,
/// advanced one mesh cell at a time through the exact semigroup split
/// conv(t_m) = e^{-mu dt} conv(t_{m-1}) + cell integral. On each cell the
/// weighted source is held at the average of its endpoint values (right
/// endpoint on the first cell, where s = 0 is not evaluable).
class DuhamelAccumulator {
public:
    DuhamelAccumulator(const TorusGrid& grid, int grade, const GradedMesh& mesh,
                       SingularWeight weight)
        : mesh_(mesh),
          weight_(weight),
          acc_(grid, grade),
          prev_src_(grid, grade),
          tables_(GridTables::get(grid)) {}

    int position() const { return pos_; }
    const SpectralFormField& value() const { return acc_; }

    /// Advances from node pos to pos+1; src_next is the (already projected)
    /// source at node pos+1.
    const SpectralFormField& advance(const SpectralFormField& src_next) {
        if (pos_ >= mesh_.M) throw std::logic_error("DuhamelAccumulator: past final node");
        const int m = pos_ + 1;
        const double a = mesh_.nodes[m - 1];
        const double b = mesh_.nodes[m];

        SpectralFormField held = src_next;
        if (weight_ == SingularWeight::ThreeQuarters) {
            if (m == 1) {
                held *= std::pow(b, 0.75);
            } else {
                held *= 0.5 * std::pow(b, 0.75);
                SpectralFormField left = prev_src_;
                left *= 0.5 * std::pow(a, 0.75);
                held += left;
            }
        } else if (m > 1) {
            held *= 0.5;
            SpectralFormField left = prev_src_;
            left *= 0.5;
            held += left;
        }

        const auto& uniq = tables_->unique_mu;
        std::vector<double> estep(uniq.size()), wcell(uniq.size());
        for (std::size_t i = 0; i < uniq.size(); ++i) {
            estep[i] = std::exp(-uniq[i] * (b - a));
            wcell[i] = weight_ == SingularWeight::ThreeQuarters
                           ? cell_weight_singular(uniq[i], a, b, b)
                           : cell_weight_plain(uniq[i], a, b, b);
        }
        const auto& idx = tables_->mu_index;
        for (std::size_t bl = 0; bl < acc_.blade_count(); ++bl) {
            auto& dst = acc_.hat(bl);
            const auto& h = held.hat(bl);
            for (std::size_t mm = 0; mm < dst.size(); ++mm)
                dst[mm] = estep[idx[mm]] * dst[mm] + wcell[idx[mm]] * h[mm];
        }
        prev_src_ = src_next;
        pos_ = m;
        return acc_;
    }

private:
    GradedMesh mesh_;
    SingularWeight weight_;
    SpectralFormField acc_;
    SpectralFormField prev_src_;
    std::shared_ptr<const GridTables> tables_;
    int pos_ = 0;
};

namespace detail {
inline SpectralFormField project_for(SemigroupKind kind, const SpectralFormField& w) {
    switch (kind) {
        case SemigroupKind::Stokes: return leray_project(w);
        case SemigroupKind::Maxwell: return exact_project(w);
        case SemigroupKind::Heat: break;
    }
    return w;
}
} // namespace detail

/// Convolution values at every mesh node for a full source trajectory
/// (entry 0 is never read). The kind selects the projector applied to the
/// source before the heat kernel, matching the Stokes/Maxwell semigroups.
inline std::vector<SpectralFormField> duhamel_all(
    SemigroupKind kind, const std::vector<SpectralFormField>& sources,
    const GradedMesh& mesh, SingularWeight weight = SingularWeight::ThreeQuarters) {
    if (int(sources.size()) != mesh.M + 1)
        throw std::invalid_argument("duhamel_all: source trajectory must cover every node");
    const TorusGrid& grid = sources[1].grid();
    const int grade = sources[1].grade();
    std::vector<SpectralFormField> out;
    out.reserve(mesh.M + 1);
    out.push_back(SpectralFormField::zeros(grid, grade));
    DuhamelAccumulator acc(grid, grade, mesh, weight);
    for (int j = 1; j <= mesh.M; ++j)
        out.push_back(acc.advance(detail::project_for(kind, sources[j])));
    return out;
}

/// Single-time convolution; t must be a mesh node and the source trajectory
/// must be defined on all earlier nodes.
inline SpectralFormField duhamel(SemigroupKind kind,
                                 const std::vector<SpectralFormField>& sources,
                                 const GradedMesh& mesh, double t,
                                 SingularWeight weight = SingularWeight::ThreeQuarters) {
    const int j = mesh.find_node(t);
    if (j < 0) throw std::invalid_argument("duhamel: t is not a mesh node");
    if (int(sources.size()) != mesh.M + 1)
        throw std::invalid_argument("duhamel: source trajectory missing nodes");
    return duhamel_all(kind, sources, mesh, weight)[j];
}

} // namespace hodgemhd
