#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "hodgemhd/blade.hpp"

namespace hodgemhd {

/// Uniform periodic grid on the flat torus of period L in every axis:
/// N points per axis (power of two), frequencies (2pi/L) * {-N/2+1..N/2}.
///
/// Derivative wavevectors zero out the unpaired Nyquist column m = N/2: a
/// real field carries no usable odd-derivative information there, and using
/// the same convention in every operator (d, delta, gradients, projections,
/// Laplacian) keeps the whole family mutually consistent. Solver fields are
/// dealiased well below that column, so this only matters for raw data.
struct TorusGrid {
    int n = 3;      // space dimension
    int N = 32;     // points per axis
    double L = 2.0 * 3.14159265358979323846;

    TorusGrid() = default;
    TorusGrid(int n_, int N_, double L_) : n(n_), N(N_), L(L_) {
        if (n < 1 || n > 6) throw std::invalid_argument("TorusGrid: n must be in 1..6");
        if (N < 4 || (N & (N - 1)) != 0)
            throw std::invalid_argument("TorusGrid: N must be a power of two, N >= 4");
        if (!(L > 0.0)) throw std::invalid_argument("TorusGrid: L must be positive");
    }

    std::size_t modes() const {
        std::size_t m = 1;
        for (int i = 0; i < n; ++i) m *= std::size_t(N);
        return m;
    }

    double cell_volume() const { return std::pow(L / N, n); }
    double volume() const { return std::pow(L, n); }

    /// Signed integer frequency of axis position a, in {-N/2+1 .. N/2}.
    int freq_int(int a) const { return a <= N / 2 ? a : a - N; }

    friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
        return a.n == b.n && a.N == b.N && a.L == b.L;
    }
    friend bool operator!=(const TorusGrid& a, const TorusGrid& b) { return !(a == b); }
};

/// One table entry of a grade-shifting derivative-type operator: the
/// contribution of source blade `src` through axis `axis` into destination
/// blade `dst` with geometric sign `sign`.
struct BladeCoupling {
    int axis;
    int src;
    int dst;
    int sign;
};

/// Precomputed per-grid data shared by all fields on the same grid:
/// wavevectors, |kappa|^2 with a unique-value index (semigroup multipliers
/// are memoized over it), and the blade coupling tables for d and delta.
class GridTables {
public:
    explicit GridTables(const TorusGrid& g) : grid(g) {
        const std::size_t modes = g.modes();
        const double base = 2.0 * 3.14159265358979323846 / g.L;
        kappa.assign(std::size_t(g.n) * modes, 0.0);
        mu.assign(modes, 0.0);
        std::vector<int> idx(g.n, 0);
        for (std::size_t lin = 0; lin < modes; ++lin) {
            double m2 = 0.0;
            for (int ax = 0; ax < g.n; ++ax) {
                const int a = idx[ax];
                const int f = g.freq_int(a);
                const double k = (a == g.N / 2) ? 0.0 : base * f;
                kappa[std::size_t(ax) * modes + lin] = k;
                m2 += k * k;
            }
            mu[lin] = m2;
            for (int ax = g.n - 1; ax >= 0; --ax) {
                if (++idx[ax] < g.N) break;
                idx[ax] = 0;
            }
        }
        build_unique_mu();
        for (int grade = 0; grade <= g.n; ++grade)
            blade_lists.push_back(blades_of_grade(g.n, grade));
    }

    const std::vector<BladeMask>& blades(int grade) const { return blade_lists.at(grade); }

    const double* kappa_axis(int axis) const { return kappa.data() + std::size_t(axis) * grid.modes(); }

    /// d-type couplings: src blade of `grade` wedged with e_axis into grade+1.
    const std::vector<BladeCoupling>& up_table(int grade) const {
        return table(grade, /*up=*/true);
    }

    /// delta-type couplings: e_axis contracted into src blade of `grade`.
    const std::vector<BladeCoupling>& down_table(int grade) const {
        return table(grade, /*up=*/false);
    }

    static std::shared_ptr<const GridTables> get(const TorusGrid& g) {
        static std::mutex mtx;
        static std::map<std::tuple<int, int, double>, std::shared_ptr<const GridTables>> cache;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_tuple(g.n, g.N, g.L);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto ptr = std::make_shared<const GridTables>(g);
        cache.emplace(key, ptr);
        return ptr;
    }

    TorusGrid grid;
    std::vector<double> kappa;      // [axis * modes + mode]
    std::vector<double> mu;         // |kappa|^2 per mode
    std::vector<double> unique_mu;  // ascending unique values of mu
    std::vector<std::int32_t> mu_index; // mode -> index into unique_mu

private:
    void build_unique_mu() {
        std::vector<double> sorted = mu;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        unique_mu = sorted;
        mu_index.resize(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) {
            const auto it = std::lower_bound(unique_mu.begin(), unique_mu.end(), mu[i]);
            mu_index[i] = std::int32_t(it - unique_mu.begin());
        }
    }

    const std::vector<BladeCoupling>& table(int grade, bool up) const {
        auto& slot = up ? up_tables_ : down_tables_;
        std::lock_guard<std::mutex> lock(table_mtx_);
        if (slot.size() <= std::size_t(grade)) slot.resize(grid.n + 1);
        auto& entry = slot[grade];
        if (!entry.empty() || grade_table_trivial(grade, up)) return entry;
        const auto& src_blades = blades(grade);
        const auto& dst_blades = blades(up ? grade + 1 : grade - 1);
        auto dst_index = [&](BladeMask m) {
            const auto it = std::lower_bound(dst_blades.begin(), dst_blades.end(), m);
            return int(it - dst_blades.begin());
        };
        for (int s = 0; s < int(src_blades.size()); ++s) {
            const BladeMask j = src_blades[s];
            for (int ax = 0; ax < grid.n; ++ax) {
                const BladeMask ei = BladeMask(1) << ax;
                if (up) {
                    if (j & ei) continue;
                    entry.push_back({ax, s, dst_index(j | ei), wedge_sign(ei, j)});
                } else {
                    if (!(j & ei)) continue;
                    entry.push_back({ax, s, dst_index(j & ~ei), contract_sign(ax, j)});
                }
            }
        }
        return entry;
    }

    bool grade_table_trivial(int grade, bool up) const {
        return up ? (grade >= grid.n) : (grade <= 0);
    }

    std::vector<std::vector<BladeMask>> blade_lists;
    mutable std::mutex table_mtx_;
    mutable std::vector<std::vector<BladeCoupling>> up_tables_;
    mutable std::vector<std::vector<BladeCoupling>> down_tables_;
};

} // namespace hodgemhd
