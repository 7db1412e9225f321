#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "siglap/link_diagram.hpp"
#include "siglap/plane_graph.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace siglap;
using namespace siglap::testing;

TEST_CASE("plane graph validation") {
    PlaneGraph tri = triangle_graph();
    CHECK_NOTHROW(validate_plane(tri));

    PlaneGraph bad = tri;
    bad.rotations[0] = {5, 0}; // swapped order is still fine at degree 2...
    CHECK_NOTHROW(validate_plane(bad));
    bad.rotations[0] = {0, 0}; // duplicate dart is not
    CHECK_THROWS_AS(validate_plane(bad), std::invalid_argument);

    PlaneGraph k4 = milnor_graph();
    CHECK_NOTHROW(validate_plane(k4));
}

TEST_CASE("grid patches are plane graphs with the right tree counts") {
    CHECK(link_determinant(make_grid_patch(2, 2)) == 4);    // C_4
    CHECK(link_determinant(make_grid_patch(3, 3)) == 192);  // brute-forced below
    SignedGraph g33 = make_grid_patch(3, 3).graph;
    CHECK(abs(spanning_forest_bruteforce(g33)) == 192);
    CHECK(link_determinant(make_grid_patch(4, 4)) == 100352);
}

TEST_CASE("medial of the single loop is the curl") {
    LinkDiagram dg = medial_diagram(loop_graph());
    CHECK(dg.crossing_count == 1);
    detail::DiagramStructure s = detail::analyze_diagram(dg);
    CHECK(s.arc_count == 1);
    CHECK(s.strand_count == 1);
    CHECK(s.regions.size() == 3);
    for (std::uint64_t p : {3ull, 5ull, 7ull}) CHECK(fox_coloring_dimension(dg, p) == 1);
}

TEST_CASE("medial of the triangle is a trefoil diagram") {
    LinkDiagram dg = medial_diagram(triangle_graph());
    CHECK(dg.crossing_count == 3);
    detail::DiagramStructure s = detail::analyze_diagram(dg);
    CHECK(s.arc_count == 3);
    CHECK(s.strand_count == 1);
    CHECK(fox_coloring_dimension(dg, 3) == 2);
    CHECK(fox_coloring_dimension(dg, 5) == 1);
    // brute-force oracle: 9 of the 27 assignments satisfy all relations
    CHECK(fox_colorings_bruteforce(dg, 3) == 9);
    CHECK(fox_colorings_bruteforce(dg, 5) == 5);
}

TEST_CASE("medial of the square is the (2,4) torus link diagram") {
    PlaneGraph c4 = make_grid_patch(2, 2);
    LinkDiagram dg = medial_diagram(c4);
    CHECK(dg.crossing_count == 4);
    detail::DiagramStructure s = detail::analyze_diagram(dg);
    CHECK(s.strand_count == 2);
    CHECK(s.arc_count == 4);
    CHECK(link_determinant(c4) == 4);
    for (std::uint64_t p : {3ull, 5ull, 7ull}) CHECK(fox_coloring_dimension(dg, p) == 1);
}

TEST_CASE("fox dimension rejects bad primes") {
    LinkDiagram dg = medial_diagram(triangle_graph());
    CHECK_THROWS_AS(fox_coloring_dimension(dg, 2), std::invalid_argument);
    CHECK_THROWS_AS(fox_coloring_dimension(dg, 15), std::invalid_argument);
}

TEST_CASE("tait graph inverts the medial construction") {
    for (const PlaneGraph& g : {loop_graph(), triangle_graph(), milnor_graph(), make_grid_patch(2, 3)}) {
        PlaneGraph back = tait_graph(medial_diagram(g));
        CHECK(plane_isomorphic(back, g));
    }
}

TEST_CASE("round trip on random plane graphs") {
    Rng rng(777);
    for (int t = 0; t < 30; ++t) {
        PlaneGraph g = random_plane_graph(rng, 6, 6);
        PlaneGraph back = tait_graph(medial_diagram(g));
        CHECK(plane_isomorphic(back, g));
    }
}

TEST_CASE("medial diagram of a disconnected graph is rejected") {
    PlaneGraph pg;
    pg.graph.vertex_count = 2;
    pg.graph.edges = {{0, 0, 1}};
    pg.rotations = {{0, 1}, {}};
    CHECK_THROWS_AS(medial_diagram(pg), std::invalid_argument);
}

TEST_CASE("fox dimension equals graph coloring dimension") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        PlaneGraph g = random_plane_graph(rng, 6, 6);
        LinkDiagram dg = medial_diagram(g);
        for (std::uint64_t p : {3ull, 5ull, 7ull})
            CHECK(fox_coloring_dimension(dg, p) == coloring_dimension_mod_p(g.graph, p));
    }
}

TEST_CASE("milnor graph coloring dimensions through the diagram") {
    PlaneGraph g = milnor_graph();
    LinkDiagram dg = medial_diagram(g);
    CHECK(fox_coloring_dimension(dg, 3) == 4);
    CHECK(fox_coloring_dimension(dg, 5) == 2);
    CHECK(fox_coloring_dimension(dg, 7) == 2);
}

TEST_CASE("graph colorings transport to fox colorings") {
    SECTION("zero transports to zero") {
        PlaneGraph g = triangle_graph();
        FoxColoring fc = graph_coloring_to_fox(g, {0, 0, 0}, 3);
        for (std::uint64_t c : fc.arc_colors) CHECK(c == 0);
    }
    SECTION("monochromatic coloring stays valid") {
        PlaneGraph g = make_grid_patch(2, 3);
        std::vector<std::uint64_t> colors(g.graph.vertex_count, 2);
        CHECK_NOTHROW(graph_coloring_to_fox(g, colors, 5));
    }
    SECTION("trefoil nontrivial coloring") {
        PlaneGraph g = triangle_graph();
        FoxColoring fc = graph_coloring_to_fox(g, {0, 1, 2}, 3);
        bool nontrivial = false;
        for (std::uint64_t c : fc.arc_colors) nontrivial = nontrivial || c != fc.arc_colors[0];
        CHECK(nontrivial);
    }
    SECTION("invalid graph coloring rejected") {
        PlaneGraph g = triangle_graph();
        CHECK_THROWS_AS(graph_coloring_to_fox(g, {0, 1, 1}, 3), std::invalid_argument);
    }
    SECTION("milnor 3-coloring transports to a nontrivial fox coloring") {
        PlaneGraph g = milnor_graph();
        // a basis vector of the nullspace of L mod 3, found by inspection of
        // the kernel: verified valid by the transport itself
        IntMatrix L = laplacian_matrix(g.graph);
        // find a nonconstant kernel vector mod 3 by brute force over a few
        std::vector<std::uint64_t> colors;
        bool found = false;
        for (std::uint64_t mask = 1; mask < 6561 && !found; ++mask) {
            std::vector<std::uint64_t> cand(8);
            std::uint64_t m = mask;
            for (std::size_t i = 0; i < 8; ++i) {
                cand[i] = m % 3;
                m /= 3;
            }
            bool ok = true;
            for (std::size_t i = 0; i < 8 && ok; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < 8; ++j) acc += L(i, j) * Int(static_cast<unsigned long>(cand[j]));
                ok = mpz_fdiv_ui(acc.get_mpz_t(), 3) == 0;
            }
            bool nonconst = false;
            for (std::size_t i = 1; i < 8; ++i) nonconst = nonconst || cand[i] != cand[0];
            if (ok && nonconst) {
                colors = cand;
                found = true;
            }
        }
        REQUIRE(found);
        FoxColoring fc = graph_coloring_to_fox(g, colors, 3);
        bool nontrivial = false;
        for (std::uint64_t c : fc.arc_colors) nontrivial = nontrivial || c != fc.arc_colors[0];
        CHECK(nontrivial);
    }
}

TEST_CASE("transport is injective on the coloring space") {
    Rng rng(271);
    for (int t = 0; t < 10; ++t) {
        PlaneGraph g = random_plane_graph(rng, 5, 5);
        const std::uint64_t p = 3;
        // enumerate the whole coloring space if small, map through transport,
        // and check distinct inputs give distinct arc colorings
        std::size_t dim = coloring_dimension_mod_p(g.graph, p);
        if (dim > 4) continue;
        std::set<std::vector<std::uint64_t>> images;
        std::size_t count = 0;
        std::vector<std::uint64_t> cand(g.graph.vertex_count, 0);
        IntMatrix L = laplacian_matrix(g.graph);
        auto is_coloring = [&]() {
            for (std::size_t i = 0; i < L.rows(); ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < L.cols(); ++j) acc += L(i, j) * Int(static_cast<unsigned long>(cand[j]));
                if (mpz_fdiv_ui(acc.get_mpz_t(), p) != 0) return false;
            }
            return true;
        };
        while (true) {
            if (is_coloring()) {
                ++count;
                images.insert(graph_coloring_to_fox(g, cand, p).arc_colors);
            }
            std::size_t k = 0;
            while (k < cand.size() && ++cand[k] == p) cand[k++] = 0;
            if (k == cand.size()) break;
        }
        CHECK(images.size() == count);
    }
}

TEST_CASE("nontrivial p-colorings exist exactly when p divides the determinant") {
    Rng rng(606);
    int tested = 0;
    for (int t = 0; t < 40; ++t) {
        PlaneGraph g = random_plane_graph(rng, 6, 5);
        for (SignedEdge& e : g.graph.edges) e.sign = 1;
        Int det = link_determinant(g);
        if (det == 0) continue;
        ++tested;
        LinkDiagram dg = medial_diagram(g);
        for (std::uint64_t p : {3ull, 5ull, 7ull}) {
            const bool divides = mpz_fdiv_ui(det.get_mpz_t(), p) == 0;
            CHECK((fox_coloring_dimension(dg, p) > 1) == divides);
        }
    }
    CHECK(tested > 10);
}

TEST_CASE("plane isomorphism distinguishes signs and embeddings") {
    PlaneGraph a = triangle_graph();
    PlaneGraph b = a;
    CHECK(plane_isomorphic(a, b));
    b.graph.edges[1].sign = -1;
    CHECK_FALSE(plane_isomorphic(a, b));
}
