#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "siglap/laurent.hpp"
#include "siglap/periodic.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace siglap;
using namespace siglap::testing;

TEST_CASE("ring arithmetic") {
    LaurentPoly xm1 = poly_from_coeffs({-1, 1});
    LaurentPoly xp1 = poly_from_coeffs({1, 1});
    CHECK(xm1 * xp1 == poly_from_coeffs({-1, 0, 1}));

    Rng rng(5);
    LaurentPoly f = random_laurent(rng, 2, 6, 3, 4);
    CHECK((f + (-f)).is_zero());
    CHECK((f - f).is_zero());

    // (x - 2 + x^-1)(x + 1)^2 = x^3 - 2x + x^-1, expanded by hand
    LaurentPoly window = poly_from_coeffs({1, -2, 1}, -1);
    LaurentPoly sq = xp1 * xp1;
    LaurentPoly expect(1);
    expect.add_term({3}, 1);
    expect.add_term({1}, -2);
    expect.add_term({-1}, 1);
    CHECK(window * sq == expect);

    LaurentPoly g(2);
    CHECK_THROWS_AS(f + LaurentPoly(1), std::invalid_argument);
}

TEST_CASE("multiplication agrees with evaluation at random points") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        LaurentPoly f = random_laurent(rng, 1, 5, 4, 5);
        LaurentPoly g = random_laurent(rng, 1, 5, 4, 5);
        std::complex<double> z(0.3 + 0.1 * static_cast<double>(t % 7), 1.1);
        std::complex<double> lhs = evaluate(f * g, {z});
        std::complex<double> rhs = evaluate(f, {z}) * evaluate(g, {z});
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("exact division") {
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        std::size_t d = 1 + t % 2;
        LaurentPoly f = random_laurent(rng, d, 4, 3, 3);
        LaurentPoly g = random_laurent(rng, d, 4, 3, 3);
        if (g.is_zero()) continue;
        CHECK(exact_divide(f * g, g) == f);
    }
    LaurentPoly one = LaurentPoly::constant(1, 1);
    LaurentPoly xm1 = poly_from_coeffs({-1, 1});
    CHECK_FALSE(try_exact_divide(one, xm1).has_value());
    CHECK_THROWS_AS(exact_divide(one, LaurentPoly(1)), std::domain_error);
}

TEST_CASE("determinant over the ring") {
    LaurentPoly f = poly_from_coeffs({3, 0, -2}, -1);
    LaurentMatrix m(1, 1, 1);
    m(0, 0) = f;
    CHECK(determinant_over_laurent(m) == f);

    Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        LaurentMatrix a(2, 2, 1);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a(i, j) = random_laurent(rng, 1, 3, 2, 3);
        CHECK(determinant_over_laurent(a) == a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    }
}

TEST_CASE("section 9 matrix determinant") {
    LaurentMatrix L = laplacian_over_ring(section9_graph());
    LaurentPoly det = determinant_over_laurent(L);
    // paper states 9(x - 2 + x^-1); the determinant itself is its negative
    LaurentPoly stated = poly_from_coeffs({9, -18, 9}, -1);
    CHECK(det == -stated);
    CHECK(canonical_unit_form(det) == canonical_unit_form(stated));
}

TEST_CASE("determinant commutes with evaluation") {
    Rng rng(4711);
    for (int t = 0; t < 10; ++t) {
        std::size_t n = 2 + t % 2, d = 1 + t % 2;
        LaurentMatrix a(n, n, d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = random_laurent(rng, d, 3, 2, 2);
        std::vector<std::complex<double>> z;
        for (std::size_t k = 0; k < d; ++k)
            z.push_back(std::polar(1.0 + 0.1 * static_cast<double>(k + t), 0.7 * static_cast<double>(t + 1)));
        // determinant of the evaluated matrix (Laplace expansion for n<=3)
        std::vector<std::vector<std::complex<double>>> num(n, std::vector<std::complex<double>>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) num[i][j] = evaluate(a(i, j), z);
        std::complex<double> dn;
        if (n == 2) {
            dn = num[0][0] * num[1][1] - num[0][1] * num[1][0];
        } else {
            dn = num[0][0] * (num[1][1] * num[2][2] - num[1][2] * num[2][1]) -
                 num[0][1] * (num[1][0] * num[2][2] - num[1][2] * num[2][0]) +
                 num[0][2] * (num[1][0] * num[2][1] - num[1][1] * num[2][0]);
        }
        std::complex<double> ds = evaluate(determinant_over_laurent(a), z);
        CHECK(std::abs(dn - ds) < 1e-9 * (1.0 + std::abs(dn)));
    }
}

TEST_CASE("palindromic predicate") {
    CHECK(is_palindromic(poly_from_coeffs({1, -2, 1}, -1)));
    CHECK_FALSE(is_palindromic(poly_from_coeffs({-1, 1})));
    CHECK(is_palindromic(lehmer_centered()));
    CHECK_THROWS_AS(is_palindromic(LaurentPoly::constant(2, 1)), std::invalid_argument);
}

TEST_CASE("canonical unit form") {
    LaurentPoly f = poly_from_coeffs({-3, 6, -3}, -1); // -3x^-1 + 6 - 3x
    CHECK(canonical_unit_form(f) == poly_from_coeffs({3, -6, 3}));

    LaurentPoly x5(1);
    x5.add_term({5}, 1);
    CHECK(canonical_unit_form(x5) == LaurentPoly::constant(1, 1));

    Rng rng(83);
    for (int t = 0; t < 30; ++t) {
        LaurentPoly g = random_laurent(rng, 1, 5, 4, 6);
        if (g.is_zero()) continue;
        LaurentPoly c = canonical_unit_form(g);
        CHECK(canonical_unit_form(c) == c);
        // invariant under every unit +-x^k
        LaurentPoly unit(1);
        unit.add_term({pick_int(rng, -4, 4)}, coin_sign(rng));
        CHECK(canonical_unit_form(g * unit) == c);
    }
    CHECK_THROWS_AS(canonical_unit_form(LaurentPoly(1)), std::invalid_argument);
}

TEST_CASE("evaluation") {
    LaurentPoly f = poly_from_coeffs({-1, 2, -1}, -1); // 2 - x - x^-1
    CHECK(std::abs(evaluate(f, {std::complex<double>(-1, 0)}) - std::complex<double>(4, 0)) < 1e-12);

    LaurentPoly delta = laplacian_polynomial(section9_graph());
    CHECK(std::abs(evaluate(delta, {std::complex<double>(1, 0)})) < 1e-12);

    LaurentPoly g2 = laplacian_polynomial(grid_graph(2));
    CHECK(std::abs(evaluate(g2, {{1, 0}, {1, 0}})) < 1e-12);

    CHECK_THROWS_AS(evaluate(f, {std::complex<double>(0, 0)}), std::invalid_argument);
}

TEST_CASE("mod p reduction") {
    LaurentPoly nine = poly_from_coeffs({9, -18, 9}, -1);
    CHECK(mod_p_reduce(nine, 3).is_zero());
    LaurentPoly mod2 = mod_p_reduce(nine, 2);
    LaurentPoly expect(1);
    expect.add_term({-1}, 1);
    expect.add_term({1}, 1);
    CHECK(mod2 == expect);
    LaurentPoly two = poly_from_coeffs({2, -4, 2}, -1);
    CHECK(mod_p_reduce(two, 2).is_zero());
    CHECK_THROWS_AS(mod_p_reduce(nine, 4), std::invalid_argument);
}
