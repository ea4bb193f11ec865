#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "hodgemhd/spectral_ops.hpp"

namespace testutil {

using namespace hodgemhd;

inline SpectralFormField random_field(const TorusGrid& g, int grade, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const std::size_t blades = blades_of_grade(g.n, grade).size();
    std::vector<std::vector<double>> phys(blades, std::vector<double>(g.modes()));
    for (auto& blade : phys)
        for (auto& v : blade) v = dist(rng);
    return SpectralFormField::from_physical(g, grade, phys);
}

/// Random field truncated below the dealias cutoff (smooth test data).
inline SpectralFormField random_low_mode_field(const TorusGrid& g, int grade,
                                               std::mt19937_64& rng,
                                               double fraction = 2.0 / 3.0) {
    SpectralFormField w = random_field(g, grade, rng);
    dealias_inplace(w, fraction);
    return w;
}

/// Samples a scalar function of x in [0,L)^n on the grid, row-major.
inline std::vector<double> sample(const TorusGrid& g,
                                  const std::function<double(const std::vector<double>&)>& f) {
    std::vector<double> out(g.modes());
    std::vector<int> idx(g.n, 0);
    std::vector<double> x(g.n);
    for (std::size_t m = 0; m < g.modes(); ++m) {
        for (int ax = 0; ax < g.n; ++ax) x[ax] = g.L * double(idx[ax]) / g.N;
        out[m] = f(x);
        for (int ax = g.n - 1; ax >= 0; --ax) {
            if (++idx[ax] < g.N) break;
            idx[ax] = 0;
        }
    }
    return out;
}

/// Field with a single nonzero blade given by a sampled scalar function.
inline SpectralFormField scalar_blade_field(
    const TorusGrid& g, int grade, std::size_t blade_index,
    const std::function<double(const std::vector<double>&)>& f) {
    const std::size_t blades = blades_of_grade(g.n, grade).size();
    std::vector<std::vector<double>> phys(blades, std::vector<double>(g.modes(), 0.0));
    phys.at(blade_index) = sample(g, f);
    return SpectralFormField::from_physical(g, grade, phys);
}

inline double rel_err(const SpectralFormField& got, const SpectralFormField& want) {
    SpectralFormField diff = got;
    diff -= want;
    const double denom = want.l2_norm_spectral();
    return denom > 0 ? diff.l2_norm_spectral() / denom : diff.l2_norm_spectral();
}

inline double abs_err(const SpectralFormField& got, const SpectralFormField& want) {
    SpectralFormField diff = got;
    diff -= want;
    return diff.max_abs_coeff();
}

} // namespace testutil
