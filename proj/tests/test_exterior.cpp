#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hodgemhd/multivector.hpp"

using namespace hodgemhd;

namespace {

MultivectorQ e(int dim, std::vector<int> idx) {
    return MultivectorQ::basis(dim, idx);
}

MultivectorQ random_mv(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> keep(0, 2);
    MultivectorQ w(dim);
    const BladeMask top = BladeMask(1) << dim;
    for (BladeMask m = 0; m < top; ++m)
        if (keep(rng) == 0) w.add(m, Rational(num(rng), den(rng)));
    return w;
}

MultivectorQ random_grade1(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    MultivectorQ x(dim);
    for (int i = 1; i <= dim; ++i)
        x.add(BladeMask(1) << (i - 1), Rational(num(rng), den(rng)));
    return x;
}

} // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(7, 9) * Rational(9, 7)) == Rational(1));
    CHECK(Rational(5, 8).str() == "5/8");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    // overflow is detected, not wrapped
    const Rational huge(INT64_MAX, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("wedge on basis blades") {
    CHECK(wedge(e(3, {1}), e(3, {2})) == e(3, {1, 2}));
    CHECK(wedge(e(3, {2}), e(3, {1})) == -e(3, {1, 2}));
    CHECK(wedge(e(3, {1}), e(3, {1})).is_zero());
    CHECK_THROWS_AS(wedge(e(3, {1}), e(4, {2})), std::invalid_argument);
}

TEST_CASE("wedge graded anticommutativity, exhaustive blade pairs, n=6") {
    const int n = 6;
    for (BladeMask a = 0; a < (BladeMask(1) << n); ++a)
        for (BladeMask b = 0; b < (BladeMask(1) << n); ++b) {
            MultivectorQ ma(n), mb(n);
            ma.set(a, Rational(1));
            mb.set(b, Rational(1));
            const MultivectorQ ab = wedge(ma, mb);
            const MultivectorQ ba = wedge(mb, ma);
            const int sign = (blade_grade(a) * blade_grade(b)) % 2 ? -1 : 1;
            CHECK(ab == (sign < 0 ? -ba : ba));
        }
}

TEST_CASE("wedge associativity, exhaustive blade triples, n=4") {
    const int n = 4;
    for (BladeMask a = 0; a < (BladeMask(1) << n); ++a)
        for (BladeMask b = 0; b < (BladeMask(1) << n); ++b)
            for (BladeMask c = 0; c < (BladeMask(1) << n); ++c) {
                MultivectorQ ma(n), mb(n), mc(n);
                ma.set(a, Rational(1));
                mb.set(b, Rational(1));
                mc.set(c, Rational(1));
                CHECK(wedge(wedge(ma, mb), mc) == wedge(ma, wedge(mb, mc)));
            }
}

TEST_CASE("wedge associativity on random multivectors, n=6") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_mv(rng, 6);
        const auto b = random_mv(rng, 6);
        const auto c = random_mv(rng, 6);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("contraction on basis blades") {
    CHECK(contract(e(3, {1}), e(3, {1, 2})) == e(3, {2}));
    CHECK(contract(e(3, {2}), e(3, {1, 2})) == -e(3, {1}));
    CHECK(contract(e(3, {3}), e(3, {1, 2})).is_zero());
    CHECK(contract(e(3, {1}), MultivectorQ::scalar(3, Rational(5))).is_zero());
    CHECK_THROWS_AS(contract(e(3, {1, 2}), e(3, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(contract(e(3, {1}), e(4, {1, 2})), std::invalid_argument);
}

TEST_CASE("contraction is an antiderivation, exhaustive over blades, n=6") {
    const int n = 6;
    for (int i = 1; i <= n; ++i) {
        const MultivectorQ x = e(n, {i});
        for (BladeMask a = 0; a < (BladeMask(1) << n); ++a)
            for (BladeMask b = 0; b < (BladeMask(1) << n); ++b) {
                MultivectorQ ma(n), mb(n);
                ma.set(a, Rational(1));
                mb.set(b, Rational(1));
                const MultivectorQ lhs = contract(x, wedge(ma, mb));
                MultivectorQ rhs = wedge(contract(x, ma), mb);
                const MultivectorQ second = wedge(ma, contract(x, mb));
                rhs = (blade_grade(a) % 2) ? rhs - second : rhs + second;
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("double contraction vanishes") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const auto x = random_grade1(rng, 5);
        const auto w = random_mv(rng, 5);
        CHECK(contract(x, contract(x, w)).is_zero());
    }
}

TEST_CASE("grade projection") {
    const MultivectorQ w = MultivectorQ::scalar(3, Rational(3)) + e(3, {1, 2});
    CHECK(grade_project(w, 2) == e(3, {1, 2}));
    CHECK(grade_project(e(3, {1}), 0).is_zero());
    CHECK_THROWS_AS(grade_project(w, 4), std::invalid_argument);
    CHECK_THROWS_AS(grade_project(w, -1), std::invalid_argument);

    std::mt19937_64 rng(3);
    const auto v = random_mv(rng, 6);
    MultivectorQ sum(6);
    for (int l = 0; l <= 6; ++l) sum = sum + grade_project(v, l);
    CHECK(sum == v);
}

TEST_CASE("normal split basis cases") {
    const auto par = normal_split(e(3, {1}), e(3, {1}));
    CHECK(par.tangential.is_zero());
    CHECK(par.normal == e(3, {1}));

    const auto orth = normal_split(e(3, {1}), e(3, {2}));
    CHECK(orth.tangential == e(3, {2}));
    CHECK(orth.normal.is_zero());
}

TEST_CASE("normal split reconstructs u exactly on the rational backend") {
    // unit vector with rational coordinates via a pythagorean triple
    MultivectorQ nu(3);
    nu.add(0b001, Rational(3, 5));
    nu.add(0b010, Rational(4, 5));
    std::mt19937_64 rng(19);
    for (int t = 0; t < 40; ++t) {
        const auto u = random_mv(rng, 3);
        const auto parts = normal_split(nu, u);
        CHECK(parts.tangential + parts.normal == u);
    }
}

TEST_CASE("normal split on the float backend") {
    const double s = 1.0 / std::sqrt(2.0);
    MultivectorD nu(3);
    nu.add(0b001, s);
    nu.add(0b010, s);
    MultivectorD u(3);
    u.add(0b101, 1.0); // e{1,3}
    const auto parts = normal_split(nu, u);
    const MultivectorD sum = parts.tangential + parts.normal;
    for (const auto& [m, c] : sum.coeffs())
        CHECK(std::abs(c - u.coeff(m)) < 1e-15);
    CHECK(sum.coeffs().size() == u.coeffs().size());

    MultivectorD bad(3);
    bad.add(0b001, 0.9);
    CHECK_THROWS_AS(normal_split(bad, u), std::invalid_argument);
    MultivectorD mixed = nu;
    mixed.add(0b011, 1.0);
    CHECK_THROWS_AS(normal_split(mixed, u), std::invalid_argument);
}

TEST_CASE("matrix to 2-form") {
    std::vector<Rational> e12(9, Rational(0));
    e12[0 * 3 + 1] = Rational(1);
    CHECK(matrix_to_2form(e12, 3) == e(3, {1, 2}));

    std::vector<Rational> e21(9, Rational(0));
    e21[1 * 3 + 0] = Rational(1);
    CHECK(matrix_to_2form(e21, 3) == -e(3, {1, 2}));

    std::vector<Rational> sym(9, Rational(0));
    sym[0 * 3 + 1] = sym[1 * 3 + 0] = Rational(4, 7);
    sym[0 * 3 + 0] = Rational(2);
    CHECK(matrix_to_2form(sym, 3).is_zero());

    CHECK_THROWS_AS(matrix_to_2form(std::vector<Rational>(8, Rational(0)), 3),
                    std::invalid_argument);
}

TEST_CASE("antisymmetric matrix convention carries the factor 2") {
    // ordered coefficient c_{jk} = 2 M_{jk}
    const MultivectorQ b = e(4, {1, 2}) + e(4, {2, 4});
    const auto mat = AntisymMatrix2Form<Rational>::from_multivector(b);
    CHECK(mat.entries[0 * 4 + 1] == Rational(1, 2));
    CHECK(mat.entries[1 * 4 + 0] == Rational(-1, 2));
    CHECK(mat.entries[1 * 4 + 3] == Rational(1, 2));
    CHECK(mat.to_multivector() == b);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        const auto w = grade_project(random_mv(rng, 5), 2);
        CHECK(AntisymMatrix2Form<Rational>::from_multivector(w).to_multivector() == w);
    }
}
