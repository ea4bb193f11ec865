#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgemhd/decay.hpp"
#include "hodgemhd/spectral_ops.hpp"

namespace hodgemhd {

struct InitialData {
    SpectralFormField u0;
    SpectralFormField b0;
};

/// Named analytic initial-data presets.
///   zero          both fields vanish
///   taylor-green  planar vortex pair u = (sin kx cos ky, -cos kx sin ky, 0),
///                 b = cos(k x1) e{1,3} (an exact 2-form, db = 0)
///   single-mode   shear mode u = sin(k x1) e2 with the same exact b
///   mixed         vortex plus shear u = (sin kx cos ky, -cos kx sin ky, sin kx),
///                 b = d(sin kx2, sin kx3, sin kx1)/k; all three bilinear
///                 terms survive the projections (the pure vortex ones do not)
///   bump          mean-zero smooth bumps, projected onto the constraints
/// Amplitudes scale u and b independently.
inline InitialData make_preset(const std::string& name, const TorusGrid& grid, double amp_u,
                               double amp_b) {
    const double k = 2.0 * 3.14159265358979323846 / grid.L;
    const std::size_t modes = grid.modes();

    auto coords = [&](std::size_t lin, int axis) {
        std::size_t rest = lin;
        for (int ax = grid.n - 1; ax > axis; --ax) rest /= std::size_t(grid.N);
        return grid.L * double(rest % std::size_t(grid.N)) / grid.N;
    };

    if (name == "zero") {
        return {SpectralFormField::zeros(grid, 1), SpectralFormField::zeros(grid, 2)};
    }

    if (name == "taylor-green" || name == "single-mode" || name == "mixed") {
        const std::size_t ublades = blades_of_grade(grid.n, 1).size();
        std::vector<std::vector<double>> uphys(ublades, std::vector<double>(modes, 0.0));
        for (std::size_t m = 0; m < modes; ++m) {
            const double x1 = coords(m, 0);
            if (name == "single-mode") {
                uphys[1][m] = amp_u * std::sin(k * x1);
            } else {
                const double x2 = coords(m, 1);
                uphys[0][m] = amp_u * std::sin(k * x1) * std::cos(k * x2);
                uphys[1][m] = -amp_u * std::cos(k * x1) * std::sin(k * x2);
                if (name == "mixed" && grid.n >= 3) uphys[2][m] = amp_u * std::sin(k * x1);
            }
        }
        const std::size_t bblades = blades_of_grade(grid.n, 2).size();
        std::vector<std::vector<double>> bphys(bblades, std::vector<double>(modes, 0.0));
        if (grid.n >= 3) {
            const auto blades = blades_of_grade(grid.n, 2);
            std::size_t b12 = 0, b13 = 0, b23 = 0;
            for (std::size_t i = 0; i < blades.size(); ++i) {
                if (blades[i] == 0b011) b12 = i;
                if (blades[i] == 0b101) b13 = i;
                if (blades[i] == 0b110) b23 = i;
            }
            for (std::size_t m = 0; m < modes; ++m) {
                bphys[b13][m] = amp_b * std::cos(k * coords(m, 0));
                if (name == "mixed") {
                    // b = d(sin kx2, sin kx3, sin kx1)/k: exact, and its
                    // Lorentz term is not closed, so it survives Leray
                    bphys[b12][m] = -amp_b * std::cos(k * coords(m, 1));
                    bphys[b23][m] = -amp_b * std::cos(k * coords(m, 2));
                }
            }
        }
        return {SpectralFormField::from_physical(grid, 1, uphys),
                SpectralFormField::from_physical(grid, 2, bphys)};
    }

    if (name == "bump") {
        SpectralFormField u = bump_probe(grid, 1);
        SpectralFormField b = bump_probe(grid, 2);
        u = leray_project(u);
        b = exact_project(b);
        u *= amp_u;
        b *= amp_b;
        return {u, b};
    }

    throw std::invalid_argument("make_preset: unknown preset '" + name + "'");
}

} // namespace hodgemhd
