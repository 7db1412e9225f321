#include <catch2/catch_amalgamated.hpp>

#include "siglap/int_matrix.hpp"
#include "siglap/smith.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace siglap;
using namespace siglap::testing;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(from_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    Rng rng(2024);
    for (int t = 0; t < 40; ++t) {
        IntMatrix m = random_int_matrix(rng, 4, 4, 9);
        CHECK(determinant(m) == cofactor_determinant(m));
    }
}

TEST_CASE("smith normal form on fixed instances") {
    SmithResult id3 = smith_normal_form(IntMatrix::identity(3));
    CHECK(id3.rank == 3);
    CHECK(id3.invariant_factors.empty());

    SmithResult d26 = smith_normal_form(from_rows({{2, 0}, {0, 6}}));
    CHECK(d26.rank == 2);
    CHECK(d26.invariant_factors == std::vector<Int>{2, 6});

    // gcd-of-minors oracle: d1 = gcd(entries) = 2, all 2x2 minors vanish
    IntMatrix m = from_rows({{2, 4}, {4, 8}});
    CHECK(minor_gcd(m, 1) == 2);
    CHECK(minor_gcd(m, 2) == 0);
    SmithResult s = smith_normal_form(m);
    CHECK(s.rank == 1);
    CHECK(s.invariant_factors == std::vector<Int>{2});
}

TEST_CASE("cokernel structure") {
    CHECK(cokernel_structure(IntMatrix(2, 2)) == AbelianGroupStructure{2, {}});
    // K_3 Laplacian: cokernel Z + Z/3 (gcd-of-minors: d1=1, d2=3, d3=0)
    IntMatrix k3 = from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    CHECK(minor_gcd(k3, 1) == 1);
    CHECK(minor_gcd(k3, 2) == 3);
    CHECK(minor_gcd(k3, 3) == 0);
    CHECK(cokernel_structure(k3) == AbelianGroupStructure{1, {3}});
    CHECK(torsion_complexity(k3) == 3);
    CHECK(torsion_complexity(IntMatrix::identity(4)) == 1);
}

TEST_CASE("nullity mod p") {
    CHECK(nullity_mod_p(IntMatrix(3, 3), 5) == 3);
    CHECK(nullity_mod_p(IntMatrix::identity(4), 7) == 0);
    CHECK_THROWS_AS(nullity_mod_p(IntMatrix::identity(2), 6), std::invalid_argument);
    CHECK_THROWS_AS(nullity_mod_p(IntMatrix::identity(2), 1), std::invalid_argument);
}

TEST_CASE("smith transforms diagonalize") {
    Rng rng(99);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + pick(rng, 4), m = 1 + pick(rng, 4);
        IntMatrix a = random_int_matrix(rng, n, m, 6);
        SmithTransforms st = smith_with_transforms(a);
        // U a V must be the diagonal
        IntMatrix prod(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Int acc = 0;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < m; ++l) acc += st.U(i, k) * a(k, l) * st.V(l, j);
                prod(i, j) = acc;
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j && i < st.diagonal.size())
                    CHECK(abs(prod(i, j)) == st.diagonal[i]);
                else
                    CHECK(prod(i, j) == 0);
            }
        CHECK(abs(determinant(st.U)) == 1);
        CHECK(abs(determinant(st.V)) == 1);
    }
}

TEST_CASE("invariant factor chain divides and matches minor gcds") {
    Rng rng(7);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + pick(rng, 4), m = 1 + pick(rng, 4);
        IntMatrix a = random_int_matrix(rng, n, m, 5);
        SmithTransforms st = smith_with_transforms(a);
        for (std::size_t k = 1; k < st.diagonal.size(); ++k)
            CHECK(st.diagonal[k] % st.diagonal[k - 1] == 0);
        // product of the first k diagonal entries = gcd of all k x k minors
        Int prod = 1;
        for (std::size_t k = 1; k <= std::min(n, m); ++k) {
            Int g = minor_gcd(a, k);
            if (k <= st.diagonal.size()) {
                prod *= st.diagonal[k - 1];
                CHECK(g == prod);
            } else {
                CHECK(g == 0);
            }
        }
    }
}

TEST_CASE("smith invariant under permutation and transpose") {
    Rng rng(31337);
    for (int t = 0; t < 20; ++t) {
        IntMatrix a = random_int_matrix(rng, 4, 3, 8);
        SmithResult base = smith_normal_form(a);
        IntMatrix perm = a;
        perm.swap_rows(0, 3);
        SmithResult after = smith_normal_form(perm);
        CHECK(base.rank == after.rank);
        CHECK(base.invariant_factors == after.invariant_factors);
        SmithResult tr = smith_normal_form(a.transposed());
        CHECK(base.rank == tr.rank);
        CHECK(base.invariant_factors == tr.invariant_factors);
    }
}

TEST_CASE("square matrices: |det| is the product of all smith entries") {
    Rng rng(555);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + pick(rng, 4);
        IntMatrix a = random_int_matrix(rng, n, n, 7);
        SmithTransforms st = smith_with_transforms(a);
        Int det = determinant(a);
        if (st.diagonal.size() < n) {
            CHECK(det == 0);
        } else {
            Int prod = 1;
            for (const Int& d : st.diagonal) prod *= d;
            CHECK(abs(det) == prod);
        }
    }
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(1000003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(1000001));
    CHECK(is_prime(2147483647ull));
}
