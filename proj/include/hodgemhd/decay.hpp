#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgemhd/spectral_ops.hpp"

namespace hodgemhd {

enum class SemigroupKind { Heat, Stokes, Maxwell };

inline std::string semigroup_name(SemigroupKind k) {
    switch (k) {
        case SemigroupKind::Heat: return "heat";
        case SemigroupKind::Stokes: return "stokes";
        case SemigroupKind::Maxwell: return "maxwell";
    }
    return "?";
}

/// Measured p->q smoothing ratios of a semigroup on one probe field.
/// ratio(t)      = t^{alpha/2}   ||E(t) f||_q / ||f||_p
/// grad_ratio(t) = t^{(1+alpha)/2} ||D E(t) f||_q / ||f||_p
/// with D = full gradient for heat/Stokes and D = delta for Maxwell.
/// These are probe diagnostics of the smoothing exponents, not operator
/// norms: the report carries the curves, callers decide what to assert.
struct DecayReport {
    SemigroupKind kind = SemigroupKind::Heat;
    double p = 0.0;
    double q = 0.0;
    double alpha = 0.0;
    std::vector<double> times;
    std::vector<double> ratio;
    std::vector<double> grad_ratio;

    double sup_ratio() const {
        double s = 0.0;
        for (double r : ratio) s = std::max(s, r);
        return s;
    }
    double sup_grad_ratio() const {
        double s = 0.0;
        for (double r : grad_ratio) s = std::max(s, r);
        return s;
    }
    std::size_t argmax_ratio() const {
        std::size_t a = 0;
        for (std::size_t i = 1; i < ratio.size(); ++i)
            if (ratio[i] > ratio[a]) a = i;
        return a;
    }
};

/// Exponent relation of the smoothing estimates: 1/q = 1/p - alpha/n with
/// 0 <= alpha <= min(1, n/p).
inline void check_decay_exponents(int n, double p, double q, double alpha) {
    if (!(p >= 1.0) || !(q >= 1.0))
        throw std::invalid_argument("decay exponents: p, q must be >= 1");
    if (alpha < 0.0 || alpha > std::min(1.0, double(n) / p))
        throw std::invalid_argument("decay exponents: alpha out of range");
    if (std::abs(1.0 / q - (1.0 / p - alpha / double(n))) > 1e-12)
        throw std::invalid_argument("decay exponents: 1/q = 1/p - alpha/n violated");
}

inline DecayReport decay_diagnostic(SemigroupKind kind, const SpectralFormField& f,
                                    double p, double q, double alpha,
                                    const std::vector<double>& times) {
    check_decay_exponents(f.grid().n, p, q, alpha);
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || (i > 0 && times[i] <= times[i - 1]))
            throw std::invalid_argument("decay_diagnostic: time grid must be positive increasing");
    }

    SpectralFormField probe = f;
    if (kind == SemigroupKind::Stokes) probe = leray_project(probe);
    if (kind == SemigroupKind::Maxwell) probe = exact_project(probe);

    DecayReport rep;
    rep.kind = kind;
    rep.p = p;
    rep.q = q;
    rep.alpha = alpha;
    rep.times = times;

    const double fp = probe.lp_norm(p);
    if (fp == 0.0) throw std::invalid_argument("decay_diagnostic: probe vanishes");

    for (double t : times) {
        const SpectralFormField evolved = heat_semigroup(t, probe);
        rep.ratio.push_back(std::pow(t, alpha / 2.0) * evolved.lp_norm(q) / fp);
        const double w = std::pow(t, (1.0 + alpha) / 2.0);
        if (kind == SemigroupKind::Maxwell)
            rep.grad_ratio.push_back(w * delta_spec(evolved).lp_norm(q) / fp);
        else
            rep.grad_ratio.push_back(w * gradient_lp_norm(evolved, q) / fp);
    }
    return rep;
}

/// Smooth periodic bump probe: per blade a product of squared-sine wells with
/// blade-dependent centers, mean removed. Deterministic, mean-zero, and
/// rapidly decaying in frequency.
inline SpectralFormField bump_probe(const TorusGrid& grid, int grade, double width = 0.6) {
    const std::size_t modes = grid.modes();
    const std::size_t blades = blades_of_grade(grid.n, grade).size();
    std::vector<std::vector<double>> phys(blades, std::vector<double>(modes));
    const double pi = 3.14159265358979323846;
    std::vector<int> idx(grid.n, 0);
    for (std::size_t m = 0; m < modes; ++m) {
        for (std::size_t b = 0; b < blades; ++b) {
            double v = 1.0;
            for (int ax = 0; ax < grid.n; ++ax) {
                const double x = grid.L * double(idx[ax]) / grid.N;
                const double c = grid.L * (0.15 * double(ax + 1) + 0.07 * double(b));
                const double s = std::sin(pi * (x - c) / grid.L);
                v *= std::exp(-s * s / (width * width));
            }
            phys[b][m] = v;
        }
        for (int ax = grid.n - 1; ax >= 0; --ax) {
            if (++idx[ax] < grid.N) break;
            idx[ax] = 0;
        }
    }
    SpectralFormField w = SpectralFormField::from_physical(grid, grade, phys);
    for (std::size_t b = 0; b < w.blade_count(); ++b) w.hat(b)[0] = Cplx(0.0, 0.0);
    return w;
}

} // namespace hodgemhd
