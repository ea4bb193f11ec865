#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hodgemhd/poly_form.hpp"

namespace hodgemhd {

/// Uniform draw over all exponent multi-indices of total degree <= degree.
inline std::vector<std::vector<int>> multi_indices_up_to(int n, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    // counts in mixed radix with a running degree bound
    std::function<void(int, int)> rec = [&](int axis, int left) {
        if (axis == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[axis] = e;
            rec(axis + 1, left - e);
        }
        cur[axis] = 0;
    };
    rec(0, degree);
    return out;
}

/// Random polynomial with rational coefficients p/q, |p| <= 9, 1 <= q <= 9,
/// supported on 1..3 monomials drawn uniformly from degree <= degree.
inline PolyScalar random_poly_scalar(std::mt19937_64& rng, int n, int degree,
                                     const std::vector<std::vector<int>>& support_pool) {
    std::uniform_int_distribution<int> count_dist(1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, support_pool.size() - 1);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 9);
    PolyScalar p(n);
    const int terms = count_dist(rng);
    for (int t = 0; t < terms; ++t) {
        const auto& exps = support_pool[pick(rng)];
        p.add_term(Monomial::from_exponents(exps), Rational(num_dist(rng), den_dist(rng)));
    }
    (void)degree;
    return p;
}

inline PolyForm random_poly_form(std::mt19937_64& rng, int n, int grade, int degree,
                                 const std::vector<std::vector<int>>& support_pool) {
    PolyForm w(n, grade);
    for (BladeMask blade : blades_of_grade(n, grade))
        w.add(blade, random_poly_scalar(rng, n, degree, support_pool));
    return w;
}

inline PolyForm random_poly_form(std::mt19937_64& rng, int n, int grade, int degree) {
    return random_poly_form(rng, n, grade, degree, multi_indices_up_to(n, degree));
}

struct MagicCounterexample {
    int trial = -1;
    std::string u;
    std::string b;
    std::string difference;
};

struct MagicReport {
    int n = 0;
    int degree = 0;
    int trials = 0;
    int failures = 0;
    std::size_t max_term_count = 0;
    std::vector<MagicCounterexample> counterexamples;

    bool ok() const { return failures == 0; }
};

/// Pipeline hook: the left side is assembled as d(contract(u,b)) + δ(u∧b)
/// through this function, so a deliberately broken contraction (used by the
/// mutation fixture of the identity suite) is caught by the comparison.
using ContractFn = std::function<PolyForm(const PolyForm&, const PolyForm&)>;

/// Draws `trials` random (1-form, 2-form) pairs of polynomial degree <= degree
/// and checks magic_lhs == magic_rhs by exact rational comparison.
inline MagicReport verify_magic(int n, int degree, int trials, std::uint64_t seed,
                                ContractFn lhs_contract = {}) {
    if (n < 3 || n > 6)
        throw std::invalid_argument("verify_magic: n must be in 3..6");
    if (degree < 0 || degree > 4)
        throw std::invalid_argument("verify_magic: degree must be in 0..4");
    if (trials < 0)
        throw std::invalid_argument("verify_magic: trials must be nonnegative");
    if (!lhs_contract)
        lhs_contract = [](const PolyForm& x, const PolyForm& w) { return contract(x, w); };

    MagicReport report;
    report.n = n;
    report.degree = degree;
    report.trials = trials;

    std::mt19937_64 rng(seed);
    const auto pool = multi_indices_up_to(n, degree);
    for (int trial = 0; trial < trials; ++trial) {
        const PolyForm u = random_poly_form(rng, n, 1, degree, pool);
        const PolyForm b = random_poly_form(rng, n, 2, degree, pool);
        const PolyForm lhs = d_sym(lhs_contract(u, b)) + delta_sym(wedge(u, b));
        const PolyForm rhs = magic_rhs(u, b);
        report.max_term_count =
            std::max({report.max_term_count, lhs.term_count(), rhs.term_count()});
        if (lhs != rhs) {
            ++report.failures;
            if (report.counterexamples.size() < 4)
                report.counterexamples.push_back(
                    {trial, u.str(), b.str(), (lhs - rhs).str()});
        }
    }
    return report;
}

} // namespace hodgemhd
