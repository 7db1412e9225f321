#include <catch2/catch_amalgamated.hpp>

#include "siglap/annular.hpp"
#include "siglap/braid.hpp"
#include "siglap/mahler.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace siglap;
using namespace siglap::testing;

TEST_CASE("annular validation") {
    CHECK_NOTHROW(validate_annular(grid1_annular()));
    CHECK_NOTHROW(validate_annular(doubled_grid1_annular()));
    CHECK_NOTHROW(validate_annular(section9_annular()));
    CHECK_NOTHROW(validate_annular(figure7_annular()));

    AnnularGraph bad = doubled_grid1_annular();
    bad.rotations = {{0, 1, 2, 3}}; // wrong interleaving: end faces wind twice
    CHECK_THROWS_AS(validate_annular(bad), std::invalid_argument);
}

TEST_CASE("closed components of the worked examples") {
    SECTION("line: two strands winding once, no closed components") {
        ClosedComponentsReport rep = closed_components_check(grid1_annular());
        CHECK_FALSE(rep.strand_closed_component);
        CHECK_FALSE(rep.mod2_zero);
        CHECK(rep.strand_orbit_count == 2);
        LaurentPoly expect(1);
        expect.add_term({1}, 1);
        expect.add_term({-1}, 1);
        CHECK(rep.delta_mod2 == expect);
    }
    SECTION("doubled line: closed components, zero mod 2") {
        ClosedComponentsReport rep = closed_components_check(doubled_grid1_annular());
        CHECK(rep.strand_closed_component);
        CHECK(rep.mod2_zero);
    }
    SECTION("section 9 graph: no closed components") {
        ClosedComponentsReport rep = closed_components_check(section9_annular());
        CHECK_FALSE(rep.strand_closed_component);
        CHECK_FALSE(rep.mod2_zero);
    }
}

TEST_CASE("strand trace agrees with the mod-2 predicate on random annular graphs") {
    Rng rng(9090);
    int zeros = 0, nonzeros = 0;
    for (int t = 0; t < 30; ++t) {
        AnnularGraph ag = random_annular_graph(rng, 3, 6);
        ClosedComponentsReport rep = closed_components_check(ag);
        CHECK(rep.strand_closed_component == rep.mod2_zero);
        (rep.mod2_zero ? zeros : nonzeros)++;
    }
    CHECK(zeros > 0);
    CHECK(nonzeros > 0);
}

TEST_CASE("boundary coloring count") {
    CHECK(boundary_coloring_count(figure7_graph()) == 3);
    CHECK(boundary_coloring_count(grid_graph(1)) == 1);
    CHECK(boundary_coloring_count(section9_graph()) == 9);

    PeriodicGraph dead;
    dead.dims = 1;
    dead.orbit_count = 2;
    dead.edges = {{0, 1, {0}, 1}};
    CHECK_THROWS_AS(boundary_coloring_count(dead), std::invalid_argument);
}

TEST_CASE("figure 7 polynomial") {
    LaurentPoly delta = laplacian_polynomial(figure7_graph());
    CHECK(delta == poly_from_coeffs({-3, 6, -3}, -1));
}

TEST_CASE("burau blocks") {
    BraidWord s1{2, {1}};
    IntMatrix b = burau_matrix_at_minus1(s1);
    CHECK(b(0, 0) == 2);
    CHECK(b(0, 1) == -1);
    CHECK(b(1, 0) == 1);
    CHECK(b(1, 1) == 0);

    BraidWord cancel{2, {1, -1}};
    CHECK(burau_matrix_at_minus1(cancel) == IntMatrix::identity(2));
}

TEST_CASE("burau characteristic polynomials") {
    BraidWord empty{2, {}};
    CHECK(burau_laplacian(empty) == poly_from_coeffs({1, -2, 1}));

    BraidWord s1{2, {1}};
    CHECK(burau_laplacian(s1) == poly_from_coeffs({1, -2, 1}));

    BraidWord odd{3, {1, 2}};
    CHECK_THROWS_AS(burau_laplacian(odd), std::invalid_argument);

    BraidWord bad{2, {5}};
    CHECK_THROWS_AS(burau_laplacian(bad), std::invalid_argument);
}

TEST_CASE("burau polynomial is conjugation invariant") {
    Rng rng(1212);
    for (int t = 0; t < 10; ++t) {
        const std::size_t strands = 4;
        BraidWord w{strands, {}};
        for (int k = 0; k < 5; ++k) {
            int g = static_cast<int>(1 + pick(rng, strands - 1));
            w.letters.push_back(coin_sign(rng) > 0 ? g : -g);
        }
        int u = static_cast<int>(1 + pick(rng, strands - 1));
        BraidWord conj{strands, {}};
        conj.letters.push_back(u);
        conj.letters.insert(conj.letters.end(), w.letters.begin(), w.letters.end());
        conj.letters.push_back(-u);
        CHECK(burau_laplacian(w) == burau_laplacian(conj));
    }
}

TEST_CASE("the 16-braid of the small-Mahler example") {
    BraidWord w{16, {}};
    for (int rep = 0; rep < 2; ++rep) w.letters.insert(w.letters.end(), {1, 2});
    for (int rep = 0; rep < 4; ++rep) w.letters.insert(w.letters.end(), {1, 2, 3, 4});
    for (int rep = 0; rep < 5; ++rep)
        for (int g = 1; g <= 15; ++g) w.letters.push_back(g);
    LaurentPoly chi = burau_laplacian(w);
    // the honest factorization carries (x-1)^2 (x^2+x+1) beyond the paper's
    // displayed product; all extra factors are cyclotomic
    LaurentPoly expect = poly_from_coeffs({1, -2, 1}) * poly_from_coeffs({1, 0, 1}) *
                         poly_from_coeffs({1, 1, 1}) *
                         poly_from_coeffs({1, -1, 0, 0, -1, 1, -1, 0, 0, -1, 1});
    CHECK(canonical_unit_form(chi) == canonical_unit_form(expect));
    CHECK(mahler_univariate(chi).measure == Catch::Approx(1.350980337716237).epsilon(1e-9));
}
