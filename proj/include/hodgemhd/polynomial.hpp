#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgemhd/rational.hpp"

namespace hodgemhd {

/// Monomial exponent multi-index packed 4 bits per variable (so at most 16
/// variables and per-variable degree 15 — far beyond what the exact suites
/// draw, and multiplication checks the bound anyway).
class Monomial {
public:
    static constexpr int kMaxVars = 16;
    static constexpr int kMaxExp = 15;

    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial from_exponents(const std::vector<int>& exps) {
        if (exps.size() > kMaxVars)
            throw std::invalid_argument("Monomial: too many variables");
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > kMaxExp)
                throw std::domain_error("Monomial: exponent out of range");
            m.packed_ |= std::uint64_t(exps[i]) << (4 * i);
        }
        return m;
    }

    int exponent(int var) const { return int((packed_ >> (4 * var)) & 0xF); }

    int total_degree(int nvars) const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += exponent(i);
        return d;
    }

    Monomial times(const Monomial& o, int nvars) const {
        Monomial m;
        for (int i = 0; i < nvars; ++i) {
            const int e = exponent(i) + o.exponent(i);
            if (e > kMaxExp) throw std::domain_error("Monomial: degree overflow");
            m.packed_ |= std::uint64_t(e) << (4 * i);
        }
        return m;
    }

    std::uint64_t packed() const { return packed_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.packed_ < b.packed_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.packed_ == b.packed_; }

private:
    std::uint64_t packed_ = 0;
};

/// Multivariate polynomial with exact rational coefficients; the scalar field
/// of the symbolic differential-form oracle. Stored sparsely with no zero
/// coefficients kept.
class PolyScalar {
public:
    explicit PolyScalar(int dim) : dim_(dim) {
        if (dim < 0 || dim > Monomial::kMaxVars)
            throw std::invalid_argument("PolyScalar: dimension out of range");
    }

    static PolyScalar constant(int dim, Rational c) {
        PolyScalar p(dim);
        p.add_term(Monomial::one(), c);
        return p;
    }

    static PolyScalar monomial(int dim, const std::vector<int>& exps, Rational c) {
        PolyScalar p(dim);
        p.add_term(Monomial::from_exponents(exps), c);
        return p;
    }

    /// The coordinate polynomial x_i (1-based index).
    static PolyScalar coordinate(int dim, int i) {
        std::vector<int> e(dim, 0);
        e.at(i - 1) = 1;
        return monomial(dim, e, Rational(1));
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend PolyScalar operator+(const PolyScalar& a, const PolyScalar& b) {
        require_same_dim(a, b);
        PolyScalar out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }
    friend PolyScalar operator-(const PolyScalar& a, const PolyScalar& b) {
        return a + (-b);
    }
    PolyScalar operator-() const {
        PolyScalar out(dim_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
        require_same_dim(a, b);
        PolyScalar out(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma.times(mb, a.dim_), ca * cb);
        return out;
    }
    friend PolyScalar operator*(const Rational& s, const PolyScalar& p) {
        PolyScalar out(p.dim_);
        for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
        return out;
    }

    friend bool operator==(const PolyScalar& a, const PolyScalar& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PolyScalar& a, const PolyScalar& b) { return !(a == b); }

    /// Exact partial derivative with respect to x_axis (1-based).
    PolyScalar derivative(int axis) const {
        if (axis < 1 || axis > dim_)
            throw std::invalid_argument("PolyScalar: derivative axis out of range");
        PolyScalar out(dim_);
        const int v = axis - 1;
        for (const auto& [m, c] : terms_) {
            const int e = m.exponent(v);
            if (e == 0) continue;
            std::vector<int> exps(dim_);
            for (int i = 0; i < dim_; ++i) exps[i] = m.exponent(i);
            exps[v] = e - 1;
            out.add_term(Monomial::from_exponents(exps), Rational(e) * c);
        }
        return out;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree(dim_));
        return d;
    }

    double eval(const std::vector<double>& x) const {
        double sum = 0.0;
        for (const auto& [m, c] : terms_) {
            double v = c.to_double();
            for (int i = 0; i < dim_; ++i)
                for (int e = 0; e < m.exponent(i); ++e) v *= x[i];
            sum += v;
        }
        return sum;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str();
            for (int i = 0; i < dim_; ++i) {
                const int e = m.exponent(i);
                if (e == 0) continue;
                s += "*x" + std::to_string(i + 1);
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

    static void require_same_dim(const PolyScalar& a, const PolyScalar& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("PolyScalar: dimension mismatch");
    }

private:
    int dim_;
    std::map<Monomial, Rational> terms_;
};

} // namespace hodgemhd
