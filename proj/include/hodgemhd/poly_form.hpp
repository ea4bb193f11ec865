#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgemhd/blade.hpp"
#include "hodgemhd/polynomial.hpp"

namespace hodgemhd {

/// Homogeneous differential form with exact polynomial coefficients: the
/// brute-force backend on which the Leibniz-type identity and the
/// dimension-3 correspondences are proved exactly.
class PolyForm {
public:
    PolyForm(int dim, int grade) : dim_(dim), grade_(grade) {
        if (grade < 0 || grade > dim)
            throw std::invalid_argument("PolyForm: grade out of range");
    }

    static PolyForm term(int dim, const std::vector<int>& blade_indices, PolyScalar coeff) {
        PolyForm w(dim, int(blade_indices.size()));
        w.add(blade_from_indices(blade_indices, dim), coeff);
        return w;
    }

    int dim() const { return dim_; }
    int grade() const { return grade_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<BladeMask, PolyScalar>& coeffs() const { return coeffs_; }

    PolyScalar coeff(BladeMask b) const {
        auto it = coeffs_.find(b);
        return it == coeffs_.end() ? PolyScalar(dim_) : it->second;
    }

    void add(BladeMask b, const PolyScalar& c) {
        if (blade_grade(b) != grade_)
            throw std::invalid_argument("PolyForm: blade grade mismatch");
        if (c.is_zero()) return;
        auto it = coeffs_.find(b);
        if (it == coeffs_.end()) {
            coeffs_.emplace(b, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    friend PolyForm operator+(const PolyForm& a, const PolyForm& b) {
        require_compatible(a, b);
        PolyForm out = a;
        for (const auto& [m, c] : b.coeffs_) out.add(m, c);
        return out;
    }
    friend PolyForm operator-(const PolyForm& a, const PolyForm& b) { return a + (-b); }
    PolyForm operator-() const {
        PolyForm out(dim_, grade_);
        for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(m, -c);
        return out;
    }

    friend bool operator==(const PolyForm& a, const PolyForm& b) {
        return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& [m, c] : coeffs_) n += c.term_count();
        return n;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : coeffs_) {
            if (!s.empty()) s += "  +  ";
            s += "(" + c.str() + ") " + blade_name(m);
        }
        return s;
    }

    static void require_compatible(const PolyForm& a, const PolyForm& b) {
        if (a.dim_ != b.dim_ || a.grade_ != b.grade_)
            throw std::invalid_argument("PolyForm: dimension/grade mismatch");
    }
    static void require_same_dim(const PolyForm& a, const PolyForm& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("PolyForm: dimension mismatch");
    }

private:
    int dim_;
    int grade_;
    std::map<BladeMask, PolyScalar> coeffs_;
};

inline PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    PolyForm::require_same_dim(a, b);
    const int g = a.grade() + b.grade();
    PolyForm out(a.dim(), g > a.dim() ? 0 : g);
    if (g > a.dim()) return out; // exceeds top grade, identically zero
    for (const auto& [ma, ca] : a.coeffs())
        for (const auto& [mb, cb] : b.coeffs()) {
            const int sign = wedge_sign(ma, mb);
            if (sign == 0) continue;
            PolyScalar c = ca * cb;
            out.add(ma | mb, sign < 0 ? -c : c);
        }
    return out;
}

inline PolyForm contract(const PolyForm& x, const PolyForm& w) {
    PolyForm::require_same_dim(x, w);
    if (x.grade() != 1)
        throw std::invalid_argument("contract: left factor must have grade 1");
    PolyForm out(w.dim(), w.grade() == 0 ? 0 : w.grade() - 1);
    if (w.grade() == 0) return out;
    for (const auto& [mx, cx] : x.coeffs()) {
        const int bit = std::countr_zero(mx);
        for (const auto& [mw, cw] : w.coeffs()) {
            if (!(mw & mx)) continue;
            PolyScalar c = cx * cw;
            out.add(mw & ~mx, contract_sign(bit, mw) < 0 ? -c : c);
        }
    }
    return out;
}

/// Exterior derivative d = sum_i ∂_i e_i ∧ , exact on polynomial coefficients.
inline PolyForm d_sym(const PolyForm& w) {
    const int n = w.dim();
    PolyForm out(n, w.grade() == n ? 0 : w.grade() + 1);
    if (w.grade() == n) return out;
    for (const auto& [m, c] : w.coeffs())
        for (int i = 0; i < n; ++i) {
            const BladeMask ei = BladeMask(1) << i;
            if (m & ei) continue;
            PolyScalar dc = c.derivative(i + 1);
            if (dc.is_zero()) continue;
            out.add(ei | m, wedge_sign(ei, m) < 0 ? -dc : dc);
        }
    return out;
}

/// Coderivative δ = -sum_i ∂_i e_i ⌟ , exact on polynomial coefficients.
inline PolyForm delta_sym(const PolyForm& w) {
    const int n = w.dim();
    PolyForm out(n, w.grade() == 0 ? 0 : w.grade() - 1);
    if (w.grade() == 0) return out;
    for (const auto& [m, c] : w.coeffs())
        for (int i = 0; i < n; ++i) {
            const BladeMask ei = BladeMask(1) << i;
            if (!(m & ei)) continue;
            PolyScalar dc = c.derivative(i + 1);
            if (dc.is_zero()) continue;
            out.add(m & ~ei, contract_sign(i, m) < 0 ? dc : -dc);
        }
    return out;
}

/// Square polynomial matrix, row-major; entry(i,j) is 0-based.
struct PolyMatrix {
    int dim;
    std::vector<PolyScalar> entries;

    explicit PolyMatrix(int n) : dim(n), entries(std::size_t(n) * n, PolyScalar(n)) {}

    PolyScalar& at(int i, int j) { return entries[std::size_t(i) * dim + j]; }
    const PolyScalar& at(int i, int j) const { return entries[std::size_t(i) * dim + j]; }

    PolyMatrix transpose() const {
        PolyMatrix out(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) out.at(i, j) = at(j, i);
        return out;
    }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix out(a.dim);
        for (std::size_t k = 0; k < a.entries.size(); ++k)
            out.entries[k] = a.entries[k] + b.entries[k];
        return out;
    }
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix out(a.dim);
        for (std::size_t k = 0; k < a.entries.size(); ++k)
            out.entries[k] = a.entries[k] - b.entries[k];
        return out;
    }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        PolyMatrix out(a.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                PolyScalar s(a.dim);
                for (int k = 0; k < a.dim; ++k) s = s + a.at(i, k) * b.at(k, j);
                out.at(i, j) = s;
            }
        return out;
    }

    PolyScalar trace() const {
        PolyScalar s(dim);
        for (int i = 0; i < dim; ++i) s = s + at(i, i);
        return s;
    }
};

/// Jacobian of a 1-form: entry (i,j) = ∂_i u_j.
using PolyJacobian = PolyMatrix;

inline PolyJacobian grad_matrix(const PolyForm& u) {
    if (u.grade() != 1)
        throw std::invalid_argument("grad_matrix: input must have grade 1");
    const int n = u.dim();
    PolyJacobian out(n);
    for (int j = 0; j < n; ++j) {
        const PolyScalar uj = u.coeff(BladeMask(1) << j);
        for (int i = 0; i < n; ++i) out.at(i, j) = uj.derivative(i + 1);
    }
    return out;
}

/// The 2-form as an antisymmetric matrix in the unordered double-counted
/// convention: entry (j,k) = half the ordered blade coefficient for j<k.
inline PolyMatrix antisym_matrix_of(const PolyForm& b) {
    if (b.grade() != 2)
        throw std::invalid_argument("antisym_matrix_of: input must have grade 2");
    const int n = b.dim();
    PolyMatrix out(n);
    const Rational half(1, 2);
    for (const auto& [m, c] : b.coeffs()) {
        const int j = std::countr_zero(m);
        const int k = std::countr_zero(m & (m - 1));
        out.at(j, k) = half * c;
        out.at(k, j) = -(half * c);
    }
    return out;
}

/// Sum_{i,j} M_ij e_i ∧ e_j with polynomial entries.
inline PolyForm matrix_to_2form(const PolyMatrix& m) {
    PolyForm out(m.dim, 2);
    for (int i = 0; i < m.dim; ++i)
        for (int j = i + 1; j < m.dim; ++j)
            out.add((BladeMask(1) << i) | (BladeMask(1) << j), m.at(i, j) - m.at(j, i));
    return out;
}

/// Left side of the Leibniz-type identity: d(u ⌟ b) + δ(u ∧ b).
inline PolyForm magic_lhs(const PolyForm& u, const PolyForm& b) {
    PolyForm::require_same_dim(u, b);
    if (u.grade() != 1 || b.grade() != 2)
        throw std::invalid_argument("magic_lhs: expects a 1-form and a 2-form");
    return d_sym(contract(u, b)) + delta_sym(wedge(u, b));
}

/// Right side: δu ∧ b - u ∧ δb - u ⌟ db + (∇u + ∇uᵀ)·(b - bᵀ), the last term
/// through the antisymmetric-matrix identification of the 2-form.
inline PolyForm magic_rhs(const PolyForm& u, const PolyForm& b) {
    PolyForm::require_same_dim(u, b);
    if (u.grade() != 1 || b.grade() != 2)
        throw std::invalid_argument("magic_rhs: expects a 1-form and a 2-form");
    const PolyForm t1 = wedge(delta_sym(u), b);
    const PolyForm t2 = wedge(u, delta_sym(b));
    const PolyForm t3 = contract(u, d_sym(b));
    const PolyMatrix grad = grad_matrix(u);
    const PolyMatrix bm = antisym_matrix_of(b);
    const PolyForm t4 = matrix_to_2form((grad + grad.transpose()) * (bm - bm.transpose()));
    return t1 - t2 - t3 + t4;
}

} // namespace hodgemhd
