#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgemhd/fft.hpp"
#include "hodgemhd/torus_grid.hpp"

namespace hodgemhd {

using Cplx = std::complex<double>;

/// Grade-l form field on the torus stored as one complex Fourier coefficient
/// array per grade-l blade, normalized so the physical field is
/// w(x) = sum_k hat(k) exp(i k.x). Real-valued fields keep Hermitian-symmetric
/// spectra; every operator in this library preserves that.
class SpectralFormField {
public:
    SpectralFormField() = default;

    SpectralFormField(const TorusGrid& grid, int grade)
        : grid_(grid), grade_(grade), tables_(GridTables::get(grid)) {
        if (grade < 0 || grade > grid.n)
            throw std::invalid_argument("SpectralFormField: grade out of range");
        hat_.assign(tables_->blades(grade).size(), std::vector<Cplx>(grid.modes()));
    }

    static SpectralFormField zeros(const TorusGrid& grid, int grade) {
        return SpectralFormField(grid, grade);
    }

    /// Builds the field from real samples, one row-major array per blade
    /// (axis 1 slowest).
    static SpectralFormField from_physical(const TorusGrid& grid, int grade,
                                           const std::vector<std::vector<double>>& values) {
        SpectralFormField w(grid, grade);
        if (values.size() != w.blade_count())
            throw std::invalid_argument("from_physical: one sample array per blade required");
        const auto& fft = FftPlans::get(grid);
        const double scale = 1.0 / double(grid.modes());
        for (std::size_t b = 0; b < values.size(); ++b) {
            if (values[b].size() != grid.modes())
                throw std::invalid_argument("from_physical: sample array size mismatch");
            auto& dst = w.hat_[b];
            for (std::size_t m = 0; m < dst.size(); ++m) dst[m] = Cplx(values[b][m], 0.0);
            fft.forward_inplace(dst.data());
            for (auto& c : dst) c *= scale;
        }
        return w;
    }

    /// Inverse transform back to real samples per blade.
    std::vector<std::vector<double>> to_physical() const {
        const auto& fft = FftPlans::get(grid_);
        std::vector<std::vector<double>> out(blade_count(), std::vector<double>(grid_.modes()));
        std::vector<Cplx> buf;
        for (std::size_t b = 0; b < blade_count(); ++b) {
            buf = hat_[b];
            fft.backward_inplace(buf.data());
            for (std::size_t m = 0; m < buf.size(); ++m) out[b][m] = buf[m].real();
        }
        return out;
    }

    const TorusGrid& grid() const { return grid_; }
    int grade() const { return grade_; }
    const GridTables& tables() const { return *tables_; }
    std::size_t blade_count() const { return hat_.size(); }
    const std::vector<BladeMask>& blades() const { return tables_->blades(grade_); }

    std::vector<Cplx>& hat(std::size_t blade) { return hat_[blade]; }
    const std::vector<Cplx>& hat(std::size_t blade) const { return hat_[blade]; }

    SpectralFormField& operator+=(const SpectralFormField& o) {
        require_compatible(o);
        for (std::size_t b = 0; b < hat_.size(); ++b)
            for (std::size_t m = 0; m < hat_[b].size(); ++m) hat_[b][m] += o.hat_[b][m];
        return *this;
    }
    SpectralFormField& operator-=(const SpectralFormField& o) {
        require_compatible(o);
        for (std::size_t b = 0; b < hat_.size(); ++b)
            for (std::size_t m = 0; m < hat_[b].size(); ++m) hat_[b][m] -= o.hat_[b][m];
        return *this;
    }
    SpectralFormField& operator*=(double s) {
        for (auto& blade : hat_)
            for (auto& c : blade) c *= s;
        return *this;
    }

    friend SpectralFormField operator+(SpectralFormField a, const SpectralFormField& b) {
        a += b;
        return a;
    }
    friend SpectralFormField operator-(SpectralFormField a, const SpectralFormField& b) {
        a -= b;
        return a;
    }
    friend SpectralFormField operator*(double s, SpectralFormField w) {
        w *= s;
        return w;
    }

    /// L^p norm by rectangle-rule quadrature of the pointwise euclidean
    /// norm over blade coefficients; p = infinity gives the grid max.
    double lp_norm(double p) const {
        if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
        const auto phys = to_physical();
        const std::size_t modes = grid_.modes();
        double acc = 0.0;
        const bool inf = std::isinf(p);
        for (std::size_t m = 0; m < modes; ++m) {
            double sq = 0.0;
            for (std::size_t b = 0; b < phys.size(); ++b) sq += phys[b][m] * phys[b][m];
            const double a = std::sqrt(sq);
            if (inf)
                acc = std::max(acc, a);
            else
                acc += std::pow(a, p);
        }
        if (inf) return acc;
        return std::pow(acc * grid_.cell_volume(), 1.0 / p);
    }

    /// Spectral-side L^2 norm (Parseval route), used as an independent
    /// cross-check of the quadrature definition.
    double l2_norm_spectral() const {
        double acc = 0.0;
        for (const auto& blade : hat_)
            for (const auto& c : blade) acc += std::norm(c);
        return std::sqrt(acc * grid_.volume());
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& blade : hat_)
            for (const auto& c : blade) m = std::max(m, std::abs(c));
        return m;
    }

    void require_compatible(const SpectralFormField& o) const {
        if (grid_ != o.grid_ || grade_ != o.grade_)
            throw std::invalid_argument("SpectralFormField: grid/grade mismatch");
    }

    /// Flat binary snapshot: header (u32 n, u32 N, f64 L, u32 grade), then
    /// per blade the row-major real grid samples as f64.
    void save_binary(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("save_binary: cannot open " + path);
        const std::uint32_t n = grid_.n, N = grid_.N, g = grade_;
        out.write(reinterpret_cast<const char*>(&n), 4);
        out.write(reinterpret_cast<const char*>(&N), 4);
        out.write(reinterpret_cast<const char*>(&grid_.L), 8);
        out.write(reinterpret_cast<const char*>(&g), 4);
        const auto phys = to_physical();
        for (const auto& blade : phys)
            out.write(reinterpret_cast<const char*>(blade.data()),
                      std::streamsize(blade.size() * sizeof(double)));
        if (!out) throw std::runtime_error("save_binary: write failed for " + path);
    }

    static SpectralFormField load_binary(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("load_binary: cannot open " + path);
        std::uint32_t n = 0, N = 0, g = 0;
        double L = 0.0;
        in.read(reinterpret_cast<char*>(&n), 4);
        in.read(reinterpret_cast<char*>(&N), 4);
        in.read(reinterpret_cast<char*>(&L), 8);
        in.read(reinterpret_cast<char*>(&g), 4);
        if (!in) throw std::runtime_error("load_binary: truncated header in " + path);
        const TorusGrid grid(int(n), int(N), L);
        SpectralFormField w(grid, int(g));
        std::vector<std::vector<double>> phys(w.blade_count(),
                                              std::vector<double>(grid.modes()));
        for (auto& blade : phys) {
            in.read(reinterpret_cast<char*>(blade.data()),
                    std::streamsize(blade.size() * sizeof(double)));
            if (!in) throw std::runtime_error("load_binary: truncated data in " + path);
        }
        return from_physical(grid, int(g), phys);
    }

    /// Plot-ready CSV of the physical samples; intended for small grids.
    void write_csv(std::ostream& out) const {
        const auto phys = to_physical();
        out << "# schema=hodgemhd.field.v1\n";
        for (int ax = 0; ax < grid_.n; ++ax) out << "i" << (ax + 1) << ",";
        const auto& names = blades();
        for (std::size_t b = 0; b < names.size(); ++b)
            out << blade_name(names[b]) << (b + 1 == names.size() ? "" : ",");
        out << "\n";
        std::vector<int> idx(grid_.n, 0);
        char buf[40];
        for (std::size_t m = 0; m < grid_.modes(); ++m) {
            for (int ax = 0; ax < grid_.n; ++ax) out << idx[ax] << ",";
            for (std::size_t b = 0; b < phys.size(); ++b) {
                std::snprintf(buf, sizeof buf, "%.17g", phys[b][m]);
                out << buf << (b + 1 == phys.size() ? "" : ",");
            }
            out << "\n";
            for (int ax = grid_.n - 1; ax >= 0; --ax) {
                if (++idx[ax] < grid_.N) break;
                idx[ax] = 0;
            }
        }
    }

private:
    TorusGrid grid_;
    int grade_ = 0;
    std::shared_ptr<const GridTables> tables_;
    std::vector<std::vector<Cplx>> hat_;
};

/// L^2 inner product of two fields by grid quadrature of the pointwise
/// blade-coefficient dot product.
inline double l2_inner(const SpectralFormField& a, const SpectralFormField& b) {
    a.require_compatible(b);
    const auto pa = a.to_physical();
    const auto pb = b.to_physical();
    double acc = 0.0;
    for (std::size_t blade = 0; blade < pa.size(); ++blade)
        for (std::size_t m = 0; m < pa[blade].size(); ++m)
            acc += pa[blade][m] * pb[blade][m];
    return acc * a.grid().cell_volume();
}

} // namespace hodgemhd
