#pragma once

#include <stdexcept>
#include <vector>

#include "hodgemhd/spectral_ops.hpp"

namespace hodgemhd {

/// Raised when the two algebraically equivalent routes to the induction
/// nonlinearity disagree beyond tolerance.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Convection term (u1 . grad) u2, pseudo-spectral: physical-space products
/// of u1_i with the spectral derivatives d_i u2_j, then dealiased.
inline SpectralFormField nonlin_convection(const SpectralFormField& u1,
                                           const SpectralFormField& u2, double fraction) {
    if (u1.grade() != 1 || u2.grade() != 1)
        throw std::invalid_argument("nonlin_convection: expects 1-forms");
    if (u1.grid() != u2.grid()) throw std::invalid_argument("nonlin_convection: grid mismatch");
    const TorusGrid& g = u1.grid();
    const int n = g.n;
    const std::size_t modes = g.modes();
    const auto pu = u1.to_physical();
    std::vector<std::vector<double>> out(n, std::vector<double>(modes, 0.0));
    for (int i = 0; i < n; ++i) {
        const auto pdu = axis_derivative(u2, i).to_physical();
        for (int j = 0; j < n; ++j)
            for (std::size_t m = 0; m < modes; ++m) out[j][m] += pu[i][m] * pdu[j][m];
    }
    SpectralFormField w = SpectralFormField::from_physical(g, 1, out);
    dealias_inplace(w, fraction);
    return w;
}

inline SpectralFormField nonlin_convection(const SpectralFormField& u, double fraction) {
    return nonlin_convection(u, u, fraction);
}

namespace detail {
/// Pointwise contraction of a 1-form (physical samples pa) into a form of
/// the given grade (physical samples pw), via the blade coupling table.
inline std::vector<std::vector<double>> pointwise_contract(
    const GridTables& t, int grade, const std::vector<std::vector<double>>& pa,
    const std::vector<std::vector<double>>& pw) {
    const std::size_t modes = t.grid.modes();
    const std::size_t out_blades = t.blades(grade - 1).size();
    std::vector<std::vector<double>> out(out_blades, std::vector<double>(modes, 0.0));
    for (const BladeCoupling& c : t.down_table(grade)) {
        const double s = double(c.sign);
        const auto& a = pa[c.axis];
        const auto& w = pw[c.src];
        auto& dst = out[c.dst];
        for (std::size_t m = 0; m < modes; ++m) dst[m] += s * a[m] * w[m];
    }
    return out;
}
} // namespace detail

/// Lorentz-type term (delta b1) ⌟ b2, pseudo-spectral and dealiased.
inline SpectralFormField nonlin_lorentz(const SpectralFormField& b1,
                                        const SpectralFormField& b2, double fraction) {
    if (b1.grade() != 2 || b2.grade() != 2)
        throw std::invalid_argument("nonlin_lorentz: expects 2-forms");
    if (b1.grid() != b2.grid()) throw std::invalid_argument("nonlin_lorentz: grid mismatch");
    const TorusGrid& g = b1.grid();
    const auto pa = delta_spec(b1).to_physical();
    const auto pb = b2.to_physical();
    SpectralFormField w = SpectralFormField::from_physical(
        g, 1, detail::pointwise_contract(b1.tables(), 2, pa, pb));
    dealias_inplace(w, fraction);
    return w;
}

inline SpectralFormField nonlin_lorentz(const SpectralFormField& b, double fraction) {
    return nonlin_lorentz(b, b, fraction);
}

/// Pointwise (physical-space) exterior product of two form fields.
/// fraction = 1 keeps every mode; pass the dealiasing fraction for products
/// feeding back into an evolution.
inline SpectralFormField pointwise_wedge(const SpectralFormField& a,
                                         const SpectralFormField& b, double fraction = 1.0) {
    if (a.grid() != b.grid()) throw std::invalid_argument("pointwise_wedge: grid mismatch");
    const TorusGrid& g = a.grid();
    const int grade = a.grade() + b.grade();
    if (grade > g.n)
        return SpectralFormField::zeros(g, 0); // exceeds top grade, identically zero
    const GridTables& t = a.tables();
    const auto& ablades = t.blades(a.grade());
    const auto& bblades = t.blades(b.grade());
    const auto& oblades = t.blades(grade);
    const auto pa = a.to_physical();
    const auto pb = b.to_physical();
    const std::size_t modes = g.modes();
    std::vector<std::vector<double>> out(oblades.size(), std::vector<double>(modes, 0.0));
    for (std::size_t i = 0; i < ablades.size(); ++i)
        for (std::size_t j = 0; j < bblades.size(); ++j) {
            const int sign = wedge_sign(ablades[i], bblades[j]);
            if (sign == 0) continue;
            const BladeMask m = ablades[i] | bblades[j];
            const std::size_t dst =
                std::lower_bound(oblades.begin(), oblades.end(), m) - oblades.begin();
            const double s = double(sign);
            for (std::size_t mm = 0; mm < modes; ++mm)
                out[dst][mm] += s * pa[i][mm] * pb[j][mm];
        }
    SpectralFormField w = SpectralFormField::from_physical(g, grade, out);
    if (fraction < 1.0) dealias_inplace(w, fraction);
    return w;
}

/// Induction term d(u ⌟ b) computed directly, dealiased.
inline SpectralFormField nonlin_induction(const SpectralFormField& u,
                                          const SpectralFormField& b, double fraction) {
    if (u.grade() != 1 || b.grade() != 2)
        throw std::invalid_argument("nonlin_induction: expects a 1-form and a 2-form");
    if (u.grid() != b.grid()) throw std::invalid_argument("nonlin_induction: grid mismatch");
    const TorusGrid& g = u.grid();
    const auto pu = u.to_physical();
    const auto pb = b.to_physical();
    SpectralFormField contracted = SpectralFormField::from_physical(
        g, 1, detail::pointwise_contract(b.tables(), 2, pu, pb));
    SpectralFormField w = d_spec(contracted);
    dealias_inplace(w, fraction);
    return w;
}

/// Independent route to the same term: assemble the right side of the
/// Leibniz-type identity pointwise, dealias, and project onto exact 2-forms.
/// Projection kills the coderivative summand, so on band-limited inputs this
/// must reproduce d(u ⌟ b) to roundoff.
inline SpectralFormField nonlin_induction_via_identity(const SpectralFormField& u,
                                                       const SpectralFormField& b,
                                                       double fraction) {
    if (u.grade() != 1 || b.grade() != 2)
        throw std::invalid_argument("nonlin_induction_via_identity: wrong grades");
    const TorusGrid& g = u.grid();
    const GridTables& t = u.tables();
    const int n = g.n;
    const std::size_t modes = g.modes();

    const auto pu = u.to_physical();
    const auto pb = b.to_physical();
    const auto pdelta_u = delta_spec(u).to_physical();   // one 0-form array
    const auto pdelta_b = delta_spec(b).to_physical();   // n arrays
    const auto pdb = d_spec(b).to_physical();            // grade-3 arrays

    // gradients of u: pgrad[i][j] = samples of d_i u_j
    std::vector<std::vector<std::vector<double>>> pgrad(n);
    for (int i = 0; i < n; ++i) pgrad[i] = axis_derivative(u, i).to_physical();

    const std::size_t blades2 = t.blades(2).size();
    std::vector<std::vector<double>> rhs(blades2, std::vector<double>(modes, 0.0));

    // delta u ∧ b: scalar times 2-form
    for (std::size_t bl = 0; bl < blades2; ++bl)
        for (std::size_t m = 0; m < modes; ++m) rhs[bl][m] += pdelta_u[0][m] * pb[bl][m];

    // - u ∧ delta b: wedge of two 1-forms
    {
        const auto& blades = t.blades(2);
        for (std::size_t bl = 0; bl < blades2; ++bl) {
            const BladeMask mask = blades[bl];
            const int j = std::countr_zero(mask);
            const int k = std::countr_zero(mask & (mask - 1));
            for (std::size_t m = 0; m < modes; ++m)
                rhs[bl][m] -= pu[j][m] * pdelta_b[k][m] - pu[k][m] * pdelta_b[j][m];
        }
    }

    // - u ⌟ db
    if (n >= 3) {
        const auto contracted = detail::pointwise_contract(t, 3, pu, pdb);
        for (std::size_t bl = 0; bl < blades2; ++bl)
            for (std::size_t m = 0; m < modes; ++m) rhs[bl][m] -= contracted[bl][m];
    }

    // + (grad u + grad u^T) . (b - b^T) through the antisymmetric-matrix
    // identification; (b - b^T)_{jk} is the ordered coefficient c_{jk} itself.
    {
        const auto& blades = t.blades(2);
        std::vector<double> bmat(std::size_t(n) * n);
        std::vector<double> prod(std::size_t(n) * n);
        for (std::size_t m = 0; m < modes; ++m) {
            std::fill(bmat.begin(), bmat.end(), 0.0);
            for (std::size_t bl = 0; bl < blades2; ++bl) {
                const BladeMask mask = blades[bl];
                const int j = std::countr_zero(mask);
                const int k = std::countr_zero(mask & (mask - 1));
                bmat[std::size_t(j) * n + k] = pb[bl][m];
                bmat[std::size_t(k) * n + j] = -pb[bl][m];
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double s = 0.0;
                    for (int k = 0; k < n; ++k)
                        s += (pgrad[i][k][m] + pgrad[k][i][m]) * bmat[std::size_t(k) * n + j];
                    prod[std::size_t(i) * n + j] = s;
                }
            for (std::size_t bl = 0; bl < blades2; ++bl) {
                const BladeMask mask = blades[bl];
                const int j = std::countr_zero(mask);
                const int k = std::countr_zero(mask & (mask - 1));
                rhs[bl][m] += prod[std::size_t(j) * n + k] - prod[std::size_t(k) * n + j];
            }
        }
    }

    SpectralFormField w = SpectralFormField::from_physical(g, 2, rhs);
    dealias_inplace(w, fraction);
    return exact_project(w);
}

/// Relative disagreement of the two induction routes.
inline double induction_dual_path_defect(const SpectralFormField& u,
                                         const SpectralFormField& b, double fraction) {
    const SpectralFormField primary = nonlin_induction(u, b, fraction);
    SpectralFormField diff = nonlin_induction_via_identity(u, b, fraction);
    diff -= primary;
    const double scale = primary.l2_norm_spectral();
    return scale > 0.0 ? diff.l2_norm_spectral() / scale : diff.l2_norm_spectral();
}

} // namespace hodgemhd
