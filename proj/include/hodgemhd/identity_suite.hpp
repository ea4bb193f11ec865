#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hodgemhd/dict3.hpp"
#include "hodgemhd/magic_verify.hpp"
#include "hodgemhd/nonlinear.hpp"

namespace hodgemhd {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::string note;
};

struct IdentityReport {
    std::vector<SuiteResult> suites;
    std::vector<std::string> counterexamples;

    bool ok() const {
        for (const auto& s : suites)
            if (s.failures > 0) return false;
        return true;
    }
    long long total_checks() const {
        long long n = 0;
        for (const auto& s : suites) n += s.checks;
        return n;
    }
};

struct IdentitySuiteConfig {
    int trials = 100; // per dimension for the main identity; scales the rest
    int degree = 3;
    std::uint64_t seed = 0;
    int spectral_N = 16;
    std::string mutation; // "", or "contract-sign-flip" (test fixture)
};

/// Exact and spectral identity suites: nilpotency of d and delta, the
/// dimension-3 grad/curl/div dictionary, the Leibniz-type formula, and the
/// Hodge projection identities on the torus. trials = 0 runs nothing.
inline IdentityReport run_identity_suites(const IdentitySuiteConfig& cfg) {
    if (cfg.trials < 0) throw std::invalid_argument("identity suite: trials must be >= 0");
    if (cfg.degree < 0 || cfg.degree > 4)
        throw std::invalid_argument("identity suite: degree must be in 0..4");
    if (!cfg.mutation.empty() && cfg.mutation != "contract-sign-flip")
        throw std::invalid_argument("identity suite: unknown mutation '" + cfg.mutation + "'");

    IdentityReport report;
    if (cfg.trials == 0) return report;

    std::mt19937_64 rng(cfg.seed);

    {
        SuiteResult s{"nilpotency-exact", 0, 0, "d^2 = 0 and delta^2 = 0 on random forms"};
        const int per_combo = std::max(1, cfg.trials / 20);
        for (int n = 2; n <= 6; ++n)
            for (int grade = 0; grade <= n; ++grade)
                for (int t = 0; t < per_combo; ++t) {
                    const PolyForm w = random_poly_form(rng, n, grade, std::min(cfg.degree, 2));
                    if (!d_sym(d_sym(w)).is_zero()) ++s.failures;
                    if (!delta_sym(delta_sym(w)).is_zero()) ++s.failures;
                    s.checks += 2;
                }
        report.suites.push_back(s);
    }

    {
        SuiteResult s{"dimension-3-dictionary", 0, 0,
                      "d ~ grad/curl/div and delta ~ -div/curl/-grad"};
        const int count = std::max(1, cfg.trials / 2);
        for (int t = 0; t < count; ++t) {
            const PolyForm f = random_poly_form(rng, 3, 0, cfg.degree);
            const PolyForm u = random_poly_form(rng, 3, 1, cfg.degree);
            const PolyForm b = random_poly_form(rng, 3, 2, cfg.degree);
            const PolyForm w = random_poly_form(rng, 3, 3, cfg.degree);
            if (!(vec_of_1form(d_sym(f)) == grad3(f.coeff(0)))) ++s.failures;
            if (!(vec_of_2form(d_sym(u)) == curl3(vec_of_1form(u)))) ++s.failures;
            if (!(scalar_of_3form(d_sym(b)) == div3(vec_of_2form(b)))) ++s.failures;
            if (!(delta_sym(u).coeff(0) == -div3(vec_of_1form(u)))) ++s.failures;
            if (!(vec_of_1form(delta_sym(b)) == curl3(vec_of_2form(b)))) ++s.failures;
            const auto g = grad3(scalar_of_3form(w));
            if (!(vec_of_2form(delta_sym(w)) ==
                  std::array<PolyScalar, 3>{-g[0], -g[1], -g[2]}))
                ++s.failures;
            s.checks += 6;
        }
        report.suites.push_back(s);
    }

    {
        ContractFn lhs_contract;
        if (cfg.mutation == "contract-sign-flip")
            lhs_contract = [](const PolyForm& a, const PolyForm& w) { return -contract(a, w); };
        for (int n = 3; n <= 6; ++n) {
            const int deg = n >= 5 ? std::min(cfg.degree, 2) : cfg.degree;
            const MagicReport r = verify_magic(n, deg, cfg.trials, cfg.seed + n, lhs_contract);
            SuiteResult s{"leibniz-formula-n" + std::to_string(n), r.trials, r.failures,
                          "max term count " + std::to_string(r.max_term_count)};
            for (const auto& ce : r.counterexamples)
                report.counterexamples.push_back(
                    "n=" + std::to_string(n) + " trial " + std::to_string(ce.trial) +
                    ": u = " + ce.u + " ; b = " + ce.b + " ; lhs - rhs = " + ce.difference);
            report.suites.push_back(s);
        }
    }

    {
        SuiteResult s{"spectral-projections", 0, 0,
                      "idempotence, orthogonality, Q(delta(u ∧ b)) = 0, d^2 = delta^2 = 0"};
        const TorusGrid g(3, cfg.spectral_N, 2.0 * 3.14159265358979323846);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        auto random_field = [&](int grade) {
            const std::size_t blades = blades_of_grade(g.n, grade).size();
            std::vector<std::vector<double>> phys(blades, std::vector<double>(g.modes()));
            for (auto& blade : phys)
                for (auto& v : blade) v = dist(rng);
            return SpectralFormField::from_physical(g, grade, phys);
        };
        const int count = std::max(1, cfg.trials / 10);
        for (int t = 0; t < count; ++t) {
            const auto u = random_field(1);
            const auto b = random_field(2);

            const auto pu = leray_project(u);
            SpectralFormField diff = leray_project(pu);
            diff -= pu;
            if (diff.l2_norm_spectral() > 1e-12 * u.l2_norm_spectral()) ++s.failures;
            SpectralFormField comp = u;
            comp -= pu;
            if (std::abs(l2_inner(comp, pu)) >
                1e-10 * u.l2_norm_spectral() * u.l2_norm_spectral())
                ++s.failures;

            const auto qb = exact_project(b);
            SpectralFormField qdiff = exact_project(qb);
            qdiff -= qb;
            if (qdiff.l2_norm_spectral() > 1e-12 * b.l2_norm_spectral()) ++s.failures;
            SpectralFormField bcomp = b;
            bcomp -= qb;
            if (std::abs(l2_inner(bcomp, qb)) >
                1e-10 * b.l2_norm_spectral() * b.l2_norm_spectral())
                ++s.failures;

            const auto wedge_ub = pointwise_wedge(u, b);
            const auto delta_ub = delta_spec(wedge_ub);
            if (exact_project(delta_ub).l2_norm_spectral() >
                1e-10 * (delta_ub.l2_norm_spectral() + 1e-300))
                ++s.failures;

            const double kmax2 = 3.0 * double(cfg.spectral_N / 2) * double(cfg.spectral_N / 2);
            if (d_spec(d_spec(u)).l2_norm_spectral() >
                1e-12 * kmax2 * u.l2_norm_spectral())
                ++s.failures;
            if (delta_spec(delta_spec(b)).l2_norm_spectral() >
                1e-12 * kmax2 * b.l2_norm_spectral())
                ++s.failures;
            s.checks += 7;
        }
        report.suites.push_back(s);
    }

    return report;
}

} // namespace hodgemhd
