#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgemhd/blade.hpp"
#include "hodgemhd/rational.hpp"

namespace hodgemhd {

template <class S>
struct ScalarTraits {
    static bool is_zero(const S& v) { return v == S(0); }
    static S zero() { return S(0); }
};

template <>
struct ScalarTraits<Rational> {
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational zero() { return Rational(0); }
};

/// Element of the exterior algebra Λ(R^n): a sparse map from basis blades to
/// scalar coefficients. Immutable in spirit — every operation returns a new
/// value, which keeps sharing across threads trivially safe.
template <class S>
class Multivector {
public:
    explicit Multivector(int dim) : dim_(dim) {
        if (dim < 0 || dim > 64)
            throw std::invalid_argument("Multivector: dimension must be in 0..64");
    }

    static Multivector scalar(int dim, S value) {
        Multivector w(dim);
        w.set(0, std::move(value));
        return w;
    }

    static Multivector basis(int dim, const std::vector<int>& indices, S value = S(1)) {
        Multivector w(dim);
        w.set(blade_from_indices(indices, dim), std::move(value));
        return w;
    }

    int dim() const { return dim_; }
    const std::map<BladeMask, S>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    S coeff(BladeMask b) const {
        auto it = coeffs_.find(b);
        return it == coeffs_.end() ? ScalarTraits<S>::zero() : it->second;
    }

    void set(BladeMask b, S value) {
        check_blade(b);
        if (ScalarTraits<S>::is_zero(value))
            coeffs_.erase(b);
        else
            coeffs_[b] = std::move(value);
    }

    void add(BladeMask b, const S& value) {
        check_blade(b);
        auto it = coeffs_.find(b);
        if (it == coeffs_.end()) {
            if (!ScalarTraits<S>::is_zero(value)) coeffs_.emplace(b, value);
            return;
        }
        it->second += value;
        if (ScalarTraits<S>::is_zero(it->second)) coeffs_.erase(it);
    }

    /// True when every stored blade has the same grade g (vacuously for 0).
    bool is_homogeneous(int grade) const {
        for (const auto& [b, c] : coeffs_)
            if (blade_grade(b) != grade) return false;
        return true;
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        require_same_dim(a, b);
        Multivector out = a;
        for (const auto& [m, c] : b.coeffs_) out.add(m, c);
        return out;
    }
    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        return a + (-b);
    }
    Multivector operator-() const {
        Multivector out(dim_);
        for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(m, -c);
        return out;
    }
    friend Multivector operator*(const S& s, const Multivector& w) {
        Multivector out(w.dim_);
        for (const auto& [m, c] : w.coeffs_) out.add(m, s * c);
        return out;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : coeffs_) {
            if (!s.empty()) s += " + ";
            s += scalar_str(c) + "*" + blade_name(m);
        }
        return s;
    }

    static void require_same_dim(const Multivector& a, const Multivector& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("Multivector: dimension mismatch");
    }

private:
    void check_blade(BladeMask b) const {
        if (dim_ < 64 && (b >> dim_) != 0)
            throw std::invalid_argument("Multivector: blade index exceeds dimension");
    }

    static std::string scalar_str(const Rational& r) { return r.str(); }
    static std::string scalar_str(double v) { return std::to_string(v); }

    int dim_;
    std::map<BladeMask, S> coeffs_;
};

/// Exterior product. Bilinear; on blades the sign is the merge-permutation
/// parity and overlapping index sets give zero.
template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
    Multivector<S>::require_same_dim(a, b);
    Multivector<S> out(a.dim());
    for (const auto& [ma, ca] : a.coeffs())
        for (const auto& [mb, cb] : b.coeffs()) {
            const int sign = wedge_sign(ma, mb);
            if (sign == 0) continue;
            S term = ca * cb;
            if (sign < 0) term = -term;
            out.add(ma | mb, term);
        }
    return out;
}

/// Left interior product x ⌟ w of a grade-1 element x with w.
/// e_i ⌟ (e_{j1} ∧ ... ∧ e_{jl}) drops j_k = i with sign (-1)^(k-1);
/// contraction of a scalar is zero.
template <class S>
Multivector<S> contract(const Multivector<S>& x, const Multivector<S>& w) {
    Multivector<S>::require_same_dim(x, w);
    if (!x.is_homogeneous(1))
        throw std::invalid_argument("contract: left factor must have grade 1");
    Multivector<S> out(w.dim());
    for (const auto& [mx, cx] : x.coeffs()) {
        const int bit = std::countr_zero(mx);
        for (const auto& [mw, cw] : w.coeffs()) {
            if (!(mw & mx)) continue;
            S term = cx * cw;
            if (contract_sign(bit, mw) < 0) term = -term;
            out.add(mw & ~mx, term);
        }
    }
    return out;
}

template <class S>
Multivector<S> grade_project(const Multivector<S>& w, int grade) {
    if (grade < 0 || grade > w.dim())
        throw std::invalid_argument("grade_project: grade out of range");
    Multivector<S> out(w.dim());
    for (const auto& [m, c] : w.coeffs())
        if (blade_grade(m) == grade) out.set(m, c);
    return out;
}

namespace detail {
inline bool unit_norm_check(const Rational& sq) { return sq == Rational(1); }
inline bool unit_norm_check(double sq) { return std::abs(sq - 1.0) <= 1e-12; }
} // namespace detail

template <class S>
struct NormalSplit {
    Multivector<S> tangential;
    Multivector<S> normal;
};

/// Splits u against a unit grade-1 direction nu using
/// u = nu ⌟ (nu ∧ u) + nu ∧ (nu ⌟ u); first summand is the tangential part.
template <class S>
NormalSplit<S> normal_split(const Multivector<S>& nu, const Multivector<S>& u) {
    Multivector<S>::require_same_dim(nu, u);
    if (!nu.is_homogeneous(1) || nu.is_zero())
        throw std::invalid_argument("normal_split: nu must have grade 1");
    S sq = ScalarTraits<S>::zero();
    for (const auto& [m, c] : nu.coeffs()) sq += c * c;
    if (!detail::unit_norm_check(sq))
        throw std::invalid_argument("normal_split: nu must have unit euclidean norm");
    return {contract(nu, wedge(nu, u)), wedge(nu, contract(nu, u))};
}

/// Sum_{i,j} M_ij e_i ∧ e_j for a square matrix M (row-major, M[i*n+j]).
/// The wedge antisymmetrizes, so the symmetric part of M drops out.
template <class S>
Multivector<S> matrix_to_2form(const std::vector<S>& m, int n) {
    if (n < 0 || std::size_t(n) * std::size_t(n) != m.size())
        throw std::invalid_argument("matrix_to_2form: matrix must be n x n");
    Multivector<S> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // e_i ∧ e_j picks up M_ij - M_ji on the ordered blade {i,j}.
            S c = m[std::size_t(i) * n + j] - m[std::size_t(j) * n + i];
            out.add((BladeMask(1) << i) | (BladeMask(1) << j), c);
        }
    return out;
}

/// 2-form stored as an antisymmetric n x n matrix in the unordered
/// double-counted convention: the ordered blade coefficient c_{jk} (j<k)
/// equals 2 * M_{jk}. Round-trips with Multivector are exact on rationals.
template <class S>
struct AntisymMatrix2Form {
    int dim = 0;
    std::vector<S> entries; // row-major, entries[j*dim+k]

    static AntisymMatrix2Form from_multivector(const Multivector<S>& b) {
        if (!b.is_homogeneous(2))
            throw std::invalid_argument("AntisymMatrix2Form: input must be a 2-form");
        AntisymMatrix2Form out;
        out.dim = b.dim();
        out.entries.assign(std::size_t(out.dim) * out.dim, ScalarTraits<S>::zero());
        const S half = S(1) / S(2);
        for (const auto& [m, c] : b.coeffs()) {
            const int j = std::countr_zero(m);
            const int k = std::countr_zero(m & (m - 1));
            const S v = half * c;
            out.entries[std::size_t(j) * out.dim + k] = v;
            out.entries[std::size_t(k) * out.dim + j] = -v;
        }
        return out;
    }

    Multivector<S> to_multivector() const {
        return matrix_to_2form(entries, dim);
    }
};

using MultivectorQ = Multivector<Rational>;
using MultivectorD = Multivector<double>;

} // namespace hodgemhd
