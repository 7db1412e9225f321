#pragma once

// Canonical worked instances shared across the suites.

#include <vector>

#include "siglap/annular.hpp"
#include "siglap/laurent.hpp"
#include "siglap/periodic.hpp"
#include "siglap/plane_graph.hpp"

namespace siglap::testing {

/// Univariate polynomial from ordinary coefficients c0, c1, ...
inline LaurentPoly poly_from_coeffs(const std::vector<long>& coeffs, std::int64_t low_exp = 0) {
    LaurentPoly f(1);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) f.add_term({low_exp + static_cast<std::int64_t>(k)}, coeffs[k]);
    return f;
}

/// The 4-orbit 1-periodic graph whose Laplacian matrix is printed in the
/// growth-rate example; Delta = 9(x - 2 + x^-1) up to units.
inline PeriodicGraph section9_graph() {
    PeriodicGraph g;
    g.dims = 1;
    g.orbit_count = 4;
    g.edges = {{0, 1, {0}, -1}, {0, 1, {-1}, 1}, {0, 2, {0}, -1},
               {0, 3, {-1}, 1}, {1, 2, {0}, -1}, {1, 3, {0}, 1}};
    return g;
}

/// Annular embedding of the quotient of section9_graph().
inline AnnularGraph section9_annular() {
    AnnularGraph ag;
    ag.graph = section9_graph();
    ag.rotations = {{0, 2, 6, 4}, {1, 8, 10, 3}, {5, 9}, {7, 11}};
    return ag;
}

/// The 8-vertex plane graph with tau = 0 and kappa = 9 (r = 2 quotient of
/// section9_graph(), vertex i*2+c for orbit i, coset c), embedded.
inline PlaneGraph milnor_graph() {
    PlaneGraph pg;
    pg.graph.vertex_count = 8;
    pg.graph.edges = {{0, 2, -1}, {0, 3, 1}, {0, 4, -1}, {0, 7, 1}, {2, 4, -1}, {2, 6, 1},
                      {1, 3, -1}, {1, 2, 1}, {1, 5, -1}, {1, 6, 1}, {3, 5, -1}, {3, 7, 1}};
    pg.rotations = {{0, 4, 6, 2},  {14, 12, 16, 18}, {1, 15, 10, 8}, {13, 3, 22, 20},
                    {9, 5},        {21, 17},         {19, 11},       {23, 7}};
    pg.outer_dart = 0;
    return pg;
}

/// Tangle example: loop of winding 1 plus three rungs; Delta = -3x + 6 - 3x^-1.
inline PeriodicGraph figure7_graph() {
    PeriodicGraph g;
    g.dims = 1;
    g.orbit_count = 2;
    g.edges = {{0, 0, {1}, 1}, {0, 1, {0}, 1}, {0, 1, {0}, 1}, {0, 1, {0}, 1}};
    return g;
}

inline AnnularGraph figure7_annular() {
    AnnularGraph ag;
    ag.graph = figure7_graph();
    ag.rotations = {{0, 1, 2, 4, 6}, {3, 7, 5}};
    return ag;
}

inline AnnularGraph grid1_annular() {
    AnnularGraph ag;
    ag.graph = grid_graph(1);
    ag.rotations = {{0, 1}};
    return ag;
}

inline PeriodicGraph doubled_grid1() {
    PeriodicGraph g;
    g.dims = 1;
    g.orbit_count = 1;
    g.edges = {{0, 0, {1}, 1}, {0, 0, {1}, 1}};
    return g;
}

inline AnnularGraph doubled_grid1_annular() {
    AnnularGraph ag;
    ag.graph = doubled_grid1();
    ag.rotations = {{0, 1, 3, 2}};
    return ag;
}

/// Lehmer's polynomial x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1.
inline LaurentPoly lehmer_poly() {
    return poly_from_coeffs({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
}

/// Lehmer's polynomial centered by x^-5 (palindromic).
inline LaurentPoly lehmer_centered() {
    return poly_from_coeffs({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}, -5);
}

/// Unsigned triangle with its plane embedding.
inline PlaneGraph triangle_graph() {
    PlaneGraph pg;
    pg.graph.vertex_count = 3;
    pg.graph.edges = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
    pg.rotations = {{0, 5}, {2, 1}, {4, 3}};
    pg.outer_dart = 1;
    return pg;
}

/// Single vertex with one loop; its medial diagram is the 1-crossing curl.
inline PlaneGraph loop_graph() {
    PlaneGraph pg;
    pg.graph.vertex_count = 1;
    pg.graph.edges = {{0, 0, 1}};
    pg.rotations = {{0, 1}};
    pg.outer_dart = 0;
    return pg;
}

} // namespace siglap::testing
