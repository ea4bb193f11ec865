#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hodgemhd/spectral_field.hpp"

namespace hodgemhd {

/// Exterior derivative as the per-frequency multiplier i kappa ∧ .
inline SpectralFormField d_spec(const SpectralFormField& w) {
    const TorusGrid& g = w.grid();
    SpectralFormField out(g, w.grade() == g.n ? 0 : w.grade() + 1);
    if (w.grade() == g.n) return out;
    const GridTables& t = w.tables();
    const std::size_t modes = g.modes();
    for (const BladeCoupling& c : t.up_table(w.grade())) {
        const double* k = t.kappa_axis(c.axis);
        const auto& src = w.hat(c.src);
        auto& dst = out.hat(c.dst);
        const double s = double(c.sign);
        for (std::size_t m = 0; m < modes; ++m) {
            // multiply by i * kappa * sign
            const Cplx v = src[m];
            dst[m] += Cplx(-s * k[m] * v.imag(), s * k[m] * v.real());
        }
    }
    return out;
}

/// Coderivative as the per-frequency multiplier -i kappa ⌟ .
inline SpectralFormField delta_spec(const SpectralFormField& w) {
    const TorusGrid& g = w.grid();
    SpectralFormField out(g, w.grade() == 0 ? 0 : w.grade() - 1);
    if (w.grade() == 0) return out;
    const GridTables& t = w.tables();
    const std::size_t modes = g.modes();
    for (const BladeCoupling& c : t.down_table(w.grade())) {
        const double* k = t.kappa_axis(c.axis);
        const auto& src = w.hat(c.src);
        auto& dst = out.hat(c.dst);
        const double s = -double(c.sign);
        for (std::size_t m = 0; m < modes; ++m) {
            const Cplx v = src[m];
            dst[m] += Cplx(-s * k[m] * v.imag(), s * k[m] * v.real());
        }
    }
    return out;
}

/// Partial derivative along one axis (same grade), multiplier i kappa_axis.
inline SpectralFormField axis_derivative(const SpectralFormField& w, int axis) {
    const TorusGrid& g = w.grid();
    if (axis < 0 || axis >= g.n) throw std::invalid_argument("axis_derivative: bad axis");
    SpectralFormField out(g, w.grade());
    const double* k = w.tables().kappa_axis(axis);
    for (std::size_t b = 0; b < w.blade_count(); ++b) {
        const auto& src = w.hat(b);
        auto& dst = out.hat(b);
        for (std::size_t m = 0; m < src.size(); ++m)
            dst[m] = Cplx(-k[m] * src[m].imag(), k[m] * src[m].real());
    }
    return out;
}

/// Leray projection of a 1-form field onto divergence-free fields:
/// u_hat -> u_hat - kappa (kappa . u_hat)/|kappa|^2, harmonic modes kept.
inline SpectralFormField leray_project(const SpectralFormField& u) {
    if (u.grade() != 1) throw std::invalid_argument("leray_project: expects a 1-form");
    const TorusGrid& g = u.grid();
    const GridTables& t = u.tables();
    SpectralFormField out = u;
    const std::size_t modes = g.modes();
    const int n = g.n;
    for (std::size_t m = 0; m < modes; ++m) {
        const double mu = t.mu[m];
        if (mu <= 0.0) continue;
        Cplx dot(0.0, 0.0);
        for (int j = 0; j < n; ++j) dot += t.kappa_axis(j)[m] * out.hat(j)[m];
        dot /= mu;
        for (int j = 0; j < n; ++j) out.hat(j)[m] -= t.kappa_axis(j)[m] * dot;
    }
    return out;
}

/// Projection of a 2-form field onto the range of d:
/// b_hat -> kappa ∧ (kappa ⌟ b_hat)/|kappa|^2; harmonic modes are dropped.
inline SpectralFormField exact_project(const SpectralFormField& b) {
    if (b.grade() != 2) throw std::invalid_argument("exact_project: expects a 2-form");
    const TorusGrid& g = b.grid();
    const GridTables& t = b.tables();
    SpectralFormField out(g, 2);
    const std::size_t modes = g.modes();
    const auto& down = t.down_table(2);
    const auto& up = t.up_table(1);
    std::vector<Cplx> contracted(std::size_t(g.n));
    for (std::size_t m = 0; m < modes; ++m) {
        const double mu = t.mu[m];
        if (mu <= 0.0) continue;
        for (auto& c : contracted) c = Cplx(0.0, 0.0);
        for (const BladeCoupling& c : down)
            contracted[c.dst] += double(c.sign) * t.kappa_axis(c.axis)[m] * b.hat(c.src)[m];
        for (const BladeCoupling& c : up)
            out.hat(c.dst)[m] += double(c.sign) * t.kappa_axis(c.axis)[m] * contracted[c.src] / mu;
    }
    return out;
}

namespace detail {
/// exp(-t mu) per mode, evaluated once per distinct mu.
inline std::vector<double> heat_multiplier(const GridTables& t, double time) {
    std::vector<double> per_unique(t.unique_mu.size());
    for (std::size_t i = 0; i < per_unique.size(); ++i)
        per_unique[i] = std::exp(-time * t.unique_mu[i]);
    return per_unique;
}
} // namespace detail

/// Heat semigroup e^{t Delta} of the Hodge Laplacian, any grade.
inline SpectralFormField heat_semigroup(double time, const SpectralFormField& w) {
    if (time < 0.0) throw std::domain_error("heat_semigroup: negative time");
    const GridTables& t = w.tables();
    SpectralFormField out = w;
    const auto mult = detail::heat_multiplier(t, time);
    for (std::size_t b = 0; b < out.blade_count(); ++b) {
        auto& blade = out.hat(b);
        for (std::size_t m = 0; m < blade.size(); ++m) blade[m] *= mult[t.mu_index[m]];
    }
    return out;
}

/// Torus Stokes semigroup: Leray projection followed by heat flow.
inline SpectralFormField stokes_semigroup(double time, const SpectralFormField& u) {
    if (time < 0.0) throw std::domain_error("stokes_semigroup: negative time");
    return heat_semigroup(time, leray_project(u));
}

/// Torus Maxwell semigroup: projection onto exact 2-forms, then heat flow.
inline SpectralFormField maxwell_semigroup(double time, const SpectralFormField& b) {
    if (time < 0.0) throw std::domain_error("maxwell_semigroup: negative time");
    return heat_semigroup(time, exact_project(b));
}

/// |kappa|^2 multiplier -- the spectral Hodge Laplacian (with a minus sign,
/// i.e. this returns (d delta + delta d) w).
inline SpectralFormField hodge_laplacian(const SpectralFormField& w) {
    const GridTables& t = w.tables();
    SpectralFormField out = w;
    for (std::size_t b = 0; b < out.blade_count(); ++b) {
        auto& blade = out.hat(b);
        for (std::size_t m = 0; m < blade.size(); ++m) blade[m] *= t.mu[m];
    }
    return out;
}

/// L^p norm of the full Jacobian (all axis derivatives of all blade
/// coefficients, Frobenius norm pointwise). Realizes the |grad w| norms of
/// the critical spaces.
inline double gradient_lp_norm(const SpectralFormField& w, double p) {
    if (p < 1.0) throw std::invalid_argument("gradient_lp_norm: p must be >= 1");
    const TorusGrid& g = w.grid();
    const std::size_t modes = g.modes();
    std::vector<double> sq(modes, 0.0);
    for (int ax = 0; ax < g.n; ++ax) {
        const auto phys = axis_derivative(w, ax).to_physical();
        for (std::size_t b = 0; b < phys.size(); ++b)
            for (std::size_t m = 0; m < modes; ++m) sq[m] += phys[b][m] * phys[b][m];
    }
    const bool inf = std::isinf(p);
    double acc = 0.0;
    for (std::size_t m = 0; m < modes; ++m) {
        const double a = std::sqrt(sq[m]);
        if (inf)
            acc = std::max(acc, a);
        else
            acc += std::pow(a, p);
    }
    if (inf) return acc;
    return std::pow(acc * g.cell_volume(), 1.0 / p);
}

/// Truncates every axis frequency to |m| <= floor(fraction * N/2); the
/// standard dealiasing step for quadratic products at fraction = 2/3.
inline void dealias_inplace(SpectralFormField& w, double fraction) {
    if (!(fraction > 0.0) || fraction > 1.0)
        throw std::invalid_argument("dealias_inplace: fraction must be in (0,1]");
    const TorusGrid& g = w.grid();
    const int cutoff = int(fraction * (g.N / 2));
    const std::size_t modes = g.modes();
    std::vector<char> keep(modes, 1);
    std::vector<int> idx(g.n, 0);
    for (std::size_t m = 0; m < modes; ++m) {
        for (int ax = 0; ax < g.n; ++ax) {
            const int f = g.freq_int(idx[ax]);
            if (std::abs(f) > cutoff) {
                keep[m] = 0;
                break;
            }
        }
        for (int ax = g.n - 1; ax >= 0; --ax) {
            if (++idx[ax] < g.N) break;
            idx[ax] = 0;
        }
    }
    for (std::size_t b = 0; b < w.blade_count(); ++b) {
        auto& blade = w.hat(b);
        for (std::size_t m = 0; m < modes; ++m)
            if (!keep[m]) blade[m] = Cplx(0.0, 0.0);
    }
}

} // namespace hodgemhd
