#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <random>
#include <sstream>

#include "spectral_helpers.hpp"

using namespace hodgemhd;
using namespace testutil;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("forward transform of a constant keeps only the zero mode") {
    const TorusGrid g(3, 8, 2.0 * kPi);
    const auto w = scalar_blade_field(g, 0, 0, [](const std::vector<double>&) { return 2.5; });
    CHECK(std::abs(w.hat(0)[0] - Cplx(2.5, 0.0)) < 1e-13);
    double rest = 0.0;
    for (std::size_t m = 1; m < g.modes(); ++m) rest = std::max(rest, std::abs(w.hat(0)[m]));
    CHECK(rest < 1e-13);
}

TEST_CASE("transform round-trip is the identity within 1e-12") {
    const TorusGrid g(3, 16, 5.0);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::vector<double>> phys(3, std::vector<double>(g.modes()));
    for (auto& blade : phys)
        for (auto& v : blade) v = dist(rng);
    const auto w = SpectralFormField::from_physical(g, 1, phys);
    const auto back = w.to_physical();
    double err = 0.0;
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t m = 0; m < g.modes(); ++m)
            err = std::max(err, std::abs(back[b][m] - phys[b][m]));
    CHECK(err < 1e-12);
}

TEST_CASE("cosine mode splits into two symmetric coefficients") {
    const TorusGrid g(2, 16, 2.0 * kPi);
    const auto w = scalar_blade_field(
        g, 0, 0, [&](const std::vector<double>& x) { return std::cos(2.0 * kPi * x[0] / g.L); });
    // modes (+-1, 0): linear indices 1*N and (N-1)*N
    const std::size_t plus = 1 * g.N, minus = std::size_t(g.N - 1) * g.N;
    CHECK(std::abs(w.hat(0)[plus] - Cplx(0.5, 0.0)) < 1e-13);
    CHECK(std::abs(w.hat(0)[minus] - Cplx(0.5, 0.0)) < 1e-13);
    double rest = 0.0;
    for (std::size_t m = 0; m < g.modes(); ++m)
        if (m != plus && m != minus) rest = std::max(rest, std::abs(w.hat(0)[m]));
    CHECK(rest < 1e-13);
}

TEST_CASE("d_spec on a constant vanishes and on a single mode gives the cosine") {
    const TorusGrid g(3, 16, 2.0 * kPi);
    const auto c = scalar_blade_field(g, 1, 1, [](const std::vector<double>&) { return 3.0; });
    CHECK(d_spec(c).max_abs_coeff() < 1e-14);

    // w = sin(2 pi x1 / L) e2  ->  (2 pi / L) cos(2 pi x1 / L) e{1,2}
    const double k = 2.0 * kPi / g.L;
    const auto w = scalar_blade_field(
        g, 1, 1, [&](const std::vector<double>& x) { return std::sin(k * x[0]); });
    const auto expected = scalar_blade_field(
        g, 2, 0, [&](const std::vector<double>& x) { return k * std::cos(k * x[0]); });
    CHECK(abs_err(d_spec(w), expected) < 1e-13);
}

TEST_CASE("delta_spec single-mode example") {
    const TorusGrid g(3, 16, 2.0 * kPi);
    const auto c = scalar_blade_field(g, 2, 2, [](const std::vector<double>&) { return -1.5; });
    CHECK(delta_spec(c).max_abs_coeff() < 1e-14);

    // w = sin(2 pi x1/L) e{1,2} -> -(2 pi/L) cos(2 pi x1/L) e2
    const double k = 2.0 * kPi / g.L;
    const auto w = scalar_blade_field(
        g, 2, 0, [&](const std::vector<double>& x) { return std::sin(k * x[0]); });
    const auto expected = scalar_blade_field(
        g, 1, 1, [&](const std::vector<double>& x) { return -k * std::cos(k * x[0]); });
    CHECK(abs_err(delta_spec(w), expected) < 1e-13);
}

TEST_CASE("d_spec matches analytic differentiation of a trigonometric field") {
    const TorusGrid g(3, 16, 4.0);
    const double k = 2.0 * kPi / g.L;
    // u = f e2 with f = sin(k x1) cos(2k x2); d(f e2) = d1f e{1,2} - d3f e{2,3}
    // and d3f = 0, so only the e{1,2} component survives.
    const auto u = scalar_blade_field(g, 1, 1, [&](const std::vector<double>& x) {
        return std::sin(k * x[0]) * std::cos(2.0 * k * x[1]);
    });
    const auto expected = scalar_blade_field(g, 2, 0, [&](const std::vector<double>& x) {
        return k * std::cos(k * x[0]) * std::cos(2.0 * k * x[1]);
    });
    CHECK(abs_err(d_spec(u), expected) < 1e-12);
}

TEST_CASE("d_spec and delta_spec square to zero on random fields") {
    const TorusGrid g(3, 16, 3.0);
    std::mt19937_64 rng(5);
    for (int grade = 0; grade <= 2; ++grade) {
        const auto w = random_field(g, grade, rng);
        const double kmax2 = *std::max_element(w.tables().unique_mu.begin(),
                                               w.tables().unique_mu.end());
        const double scale = kmax2 * w.l2_norm_spectral();
        CHECK(d_spec(d_spec(w)).l2_norm_spectral() / scale < 1e-12);
    }
    for (int grade = 1; grade <= 3; ++grade) {
        const auto w = random_field(g, grade, rng);
        const double kmax2 = *std::max_element(w.tables().unique_mu.begin(),
                                               w.tables().unique_mu.end());
        const double scale = kmax2 * w.l2_norm_spectral();
        CHECK(delta_spec(delta_spec(w)).l2_norm_spectral() / scale < 1e-12);
    }
}

TEST_CASE("adjointness of d and delta in the grid inner product") {
    const TorusGrid g(3, 8, 2.0 * kPi);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 5; ++t) {
        const auto a1 = random_field(g, 1, rng);
        const auto b2 = random_field(g, 2, rng);
        const double lhs = l2_inner(d_spec(a1), b2);
        const double rhs = l2_inner(a1, delta_spec(b2));
        CHECK(std::abs(lhs - rhs) <=
              1e-10 * std::max(1.0, std::abs(lhs) + std::abs(rhs)));

        const auto a0 = random_field(g, 0, rng);
        const auto b1 = random_field(g, 1, rng);
        CHECK(std::abs(l2_inner(d_spec(a0), b1) - l2_inner(a0, delta_spec(b1))) <=
              1e-10 * std::max(1.0, b1.l2_norm_spectral() * a0.l2_norm_spectral()));
    }
}

TEST_CASE("leray projection annihilates gradients and fixes divergence-free modes") {
    const TorusGrid g(3, 16, 2.0 * kPi);
    std::mt19937_64 rng(11);

    auto f = random_field(g, 0, rng);
    f.hat(0)[0] = Cplx(0.0, 0.0); // zero-mean potential
    const auto grad = d_spec(f);
    CHECK(leray_project(grad).l2_norm_spectral() / grad.l2_norm_spectral() < 1e-12);

    // single mode along x1 with coefficient orthogonal to k: u = sin(k x1) e2
    const double k = 2.0 * kPi / g.L;
    const auto u = scalar_blade_field(
        g, 1, 1, [&](const std::vector<double>& x) { return std::sin(k * x[0]); });
    CHECK(rel_err(leray_project(u), u) < 1e-13);

    for (int t = 0; t < 3; ++t) {
        const auto w = random_field(g, 1, rng);
        const auto pw = leray_project(w);
        CHECK(rel_err(leray_project(pw), pw) < 1e-12);         // idempotent
        const auto dw = delta_spec(pw);
        CHECK(dw.l2_norm_spectral() / (w.l2_norm_spectral() + 1.0) < 1e-10);
        // Hodge orthogonality of the two components
        SpectralFormField comp = w;
        comp -= pw;
        CHECK(std::abs(l2_inner(comp, pw)) <
              1e-10 * w.l2_norm_spectral() * w.l2_norm_spectral());
    }
}

TEST_CASE("exact projection fixes exact fields and kills coexact ones") {
    const TorusGrid g(3, 16, 2.0 * kPi);
    std::mt19937_64 rng(13);

    const auto a = random_field(g, 1, rng);
    const auto da = d_spec(a);
    CHECK(rel_err(exact_project(da), da) < 1e-12);

    const auto c = random_field(g, 3, rng);
    const auto dc = delta_spec(c);
    CHECK(exact_project(dc).l2_norm_spectral() / dc.l2_norm_spectral() < 1e-12);

    const auto constant =
        scalar_blade_field(g, 2, 1, [](const std::vector<double>&) { return 4.0; });
    CHECK(exact_project(constant).max_abs_coeff() < 1e-14);

    for (int t = 0; t < 3; ++t) {
        const auto w = random_field(g, 2, rng);
        const auto qw = exact_project(w);
        CHECK(rel_err(exact_project(qw), qw) < 1e-12);
        SpectralFormField comp = w;
        comp -= qw;
        CHECK(std::abs(l2_inner(comp, qw)) <
              1e-10 * w.l2_norm_spectral() * w.l2_norm_spectral());
    }
}

TEST_CASE("projection of coderivatives of wedges vanishes") {
    // torus form of the identity Q(delta(u ∧ b)) = 0
    const TorusGrid g(3, 16, 2.0 * kPi);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        const auto u = random_low_mode_field(g, 1, rng);
        const auto b = random_low_mode_field(g, 2, rng);
        // pointwise wedge u ∧ b on the grid
        const auto pu = u.to_physical();
        const auto pb = b.to_physical();
        std::vector<std::vector<double>> w3(1, std::vector<double>(g.modes(), 0.0));
        // e1∧e{2,3} = +e123, e2∧e{1,3} = -e123, e3∧e{1,2} = +e123
        for (std::size_t m = 0; m < g.modes(); ++m)
            w3[0][m] = pu[0][m] * pb[2][m] - pu[1][m] * pb[1][m] + pu[2][m] * pb[0][m];
        const auto ub = SpectralFormField::from_physical(g, 3, w3);
        const auto delta_ub = delta_spec(ub);
        CHECK(exact_project(delta_ub).l2_norm_spectral() /
                  (delta_ub.l2_norm_spectral() + 1e-300) <
              1e-10);
    }
}

TEST_CASE("lp norms: analytic constant, Parseval, triangle inequality") {
    const TorusGrid g(3, 8, 3.0);
    const auto c = scalar_blade_field(g, 1, 0, [](const std::vector<double>&) { return -2.0; });
    const double V = g.volume();
    CHECK(std::abs(c.lp_norm(2.0) - 2.0 * std::pow(V, 0.5)) < 1e-12);
    CHECK(std::abs(c.lp_norm(3.0) - 2.0 * std::pow(V, 1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(c.lp_norm(std::numeric_limits<double>::infinity()) - 2.0) < 1e-13);

    std::mt19937_64 rng(19);
    const auto w = random_field(g, 2, rng);
    CHECK(std::abs(w.lp_norm(2.0) - w.l2_norm_spectral()) < 1e-10 * w.l2_norm_spectral());

    const auto v = random_field(g, 2, rng);
    for (double p : {1.0, 2.0, 4.0}) {
        SpectralFormField sum = w;
        sum += v;
        CHECK(sum.lp_norm(p) <= w.lp_norm(p) + v.lp_norm(p) + 1e-12);
    }
    CHECK_THROWS_AS(w.lp_norm(0.5), std::invalid_argument);
}

TEST_CASE("binary snapshot round trip") {
    const TorusGrid g(3, 8, 2.5);
    std::mt19937_64 rng(23);
    const auto w = random_field(g, 2, rng);
    const std::string path = "field_roundtrip.bin";
    w.save_binary(path);
    const auto r = SpectralFormField::load_binary(path);
    REQUIRE(r.grid() == g);
    REQUIRE(r.grade() == 2);
    CHECK(abs_err(r, w) < 1e-12);
    std::remove(path.c_str());
}

TEST_CASE("csv field dump has schema header") {
    const TorusGrid g(2, 4, 1.0);
    std::mt19937_64 rng(29);
    const auto w = random_field(g, 1, rng);
    std::ostringstream os;
    w.write_csv(os);
    const std::string s = os.str();
    CHECK(s.rfind("# schema=hodgemhd.field.v1", 0) == 0);
    CHECK(s.find("e{1}") != std::string::npos);
}

TEST_CASE("four-dimensional operators keep the complex identities") {
    const TorusGrid g(4, 8, 2.0 * kPi);
    std::mt19937_64 rng(43);
    const auto w = random_field(g, 2, rng);
    const double scale = 48.0 * w.l2_norm_spectral(); // 4 axes, |m| <= 4 each... bound only
    CHECK(d_spec(d_spec(w)).l2_norm_spectral() / scale < 1e-12);
    CHECK(delta_spec(delta_spec(w)).l2_norm_spectral() / scale < 1e-12);

    const auto a = random_field(g, 1, rng);
    const auto da = d_spec(a);
    CHECK(rel_err(exact_project(da), da) < 1e-12);
    const auto pu = leray_project(a);
    CHECK(delta_spec(pu).l2_norm_spectral() / (a.l2_norm_spectral() + 1.0) < 1e-10);

    // interior blades of a genuinely 4-dimensional grade-2 field couple both
    // ways: d raises to all four grade-3 blades
    CHECK(blades_of_grade(4, 2).size() == 6);
    CHECK(d_spec(w).blade_count() == 4);
}

TEST_CASE("dealias truncation keeps low modes only") {
    const TorusGrid g(2, 16, 2.0 * kPi);
    std::mt19937_64 rng(31);
    auto w = random_field(g, 0, rng);
    dealias_inplace(w, 2.0 / 3.0);
    // cutoff floor(2/3 * 8) = 5: mode 6 must vanish, mode 5 survives
    bool any5 = false;
    for (std::size_t a = 0; a < std::size_t(g.N); ++a)
        for (std::size_t bb = 0; bb < std::size_t(g.N); ++bb) {
            const int f1 = g.freq_int(int(a)), f2 = g.freq_int(int(bb));
            const auto v = std::abs(w.hat(0)[a * g.N + bb]);
            if (std::max(std::abs(f1), std::abs(f2)) > 5) CHECK(v == 0.0);
            if (std::abs(f1) == 5 && v > 1e-12) any5 = true;
        }
    CHECK(any5);
}
