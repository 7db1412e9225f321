#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "siglap/laurent.hpp"
#include "siglap/periodic.hpp"
#include "siglap/plane_graph.hpp"

namespace siglap {

/// 1-periodic plane graph: the finite quotient embedded in the annulus,
/// given by a rotation system over the quotient darts. Dart 2e sits at
/// edges[e].from, dart 2e+1 at edges[e].to; walking dart 2e accrues the edge
/// shift, 2e+1 the negative.
struct AnnularGraph {
    PeriodicGraph graph; // dims must be 1
    std::vector<std::vector<Dart>> rotations;

    std::size_t dart_count() const { return 2 * graph.edges.size(); }
    std::size_t dart_vertex(Dart d) const {
        const PeriodicEdge& e = graph.edges[d >> 1];
        return (d & 1u) ? e.to : e.from;
    }
    std::int64_t dart_shift(Dart d) const {
        const PeriodicEdge& e = graph.edges[d >> 1];
        return (d & 1u) ? -e.shift[0] : e.shift[0];
    }
};

namespace detail {

struct AnnularMap {
    std::vector<Dart> sigma, sigma_inv;
    std::vector<std::int64_t> face_winding;
    std::size_t face_count = 0;
};

inline AnnularMap analyze_annular(const AnnularGraph& ag) {
    ag.graph.validate();
    if (ag.graph.dims != 1) throw std::invalid_argument("AnnularGraph: graph must be 1-periodic");
    if (ag.graph.edges.empty()) throw std::invalid_argument("AnnularGraph: at least one edge orbit required");
    const std::size_t nd = ag.dart_count();
    if (ag.rotations.size() != ag.graph.orbit_count)
        throw std::invalid_argument("AnnularGraph: one rotation list per orbit required");
    AnnularMap am;
    am.sigma.assign(nd, 0);
    am.sigma_inv.assign(nd, 0);
    std::vector<char> seen(nd, 0);
    for (std::size_t v = 0; v < ag.rotations.size(); ++v) {
        const std::vector<Dart>& cyc = ag.rotations[v];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Dart d = cyc[i];
            if (d >= nd) throw std::invalid_argument("AnnularGraph: dart id out of range");
            if (seen[d]) throw std::invalid_argument("AnnularGraph: dart listed twice");
            seen[d] = 1;
            if (ag.dart_vertex(d) != v) throw std::invalid_argument("AnnularGraph: dart listed at the wrong vertex");
            am.sigma[d] = cyc[(i + 1) % cyc.size()];
            am.sigma_inv[d] = cyc[(i + cyc.size() - 1) % cyc.size()];
        }
    }
    for (std::size_t d = 0; d < nd; ++d)
        if (!seen[d]) throw std::invalid_argument("AnnularGraph: dart missing from rotation system");
    // left-face orbits with winding = sum of traversed dart shifts
    std::vector<char> visited(nd, 0);
    for (Dart d0 = 0; d0 < nd; ++d0) {
        if (visited[d0]) continue;
        std::int64_t w = 0;
        Dart d = d0;
        do {
            visited[d] = 1;
            w += ag.dart_shift(d);
            d = am.sigma_inv[dart_mate(d)];
        } while (d != d0);
        am.face_winding.push_back(w);
        ++am.face_count;
    }
    return am;
}

} // namespace detail

/// An annular (strip-periodic plane) embedding compactifies to the sphere
/// with the two ends as faces: V - E + F = 2, exactly one face winding +1
/// and one -1, the rest 0.
inline void validate_annular(const AnnularGraph& ag) {
    detail::AnnularMap am = detail::analyze_annular(ag);
    const std::ptrdiff_t euler = static_cast<std::ptrdiff_t>(ag.graph.orbit_count) -
                                 static_cast<std::ptrdiff_t>(ag.graph.edges.size()) +
                                 static_cast<std::ptrdiff_t>(am.face_count);
    if (euler != 2)
        throw std::invalid_argument("AnnularGraph: rotation system fails the Euler check (V - E + F != 2)");
    std::size_t plus = 0, minus = 0;
    for (std::int64_t w : am.face_winding) {
        if (w == 1) ++plus;
        else if (w == -1) ++minus;
        else if (w != 0) throw std::invalid_argument("AnnularGraph: face with winding outside {-1, 0, 1}");
    }
    if (plus != 1 || minus != 1)
        throw std::invalid_argument("AnnularGraph: embedding must have exactly one end face per side");
}

struct ClosedComponentsReport {
    bool strand_closed_component = false; // some medial strand closes with net shift 0
    bool mod2_zero = false;               // Laplacian polynomial vanishes mod 2
    LaurentPoly delta_mod2{1};
    std::size_t strand_orbit_count = 0;
    std::vector<std::int64_t> strand_windings; // one per strand orbit
};

/// Trace the strands of the quotient medial diagram with winding bookkeeping
/// and compare against the mod-2 Laplacian polynomial predicate. The two
/// answers must agree; both are returned.
inline ClosedComponentsReport closed_components_check(const AnnularGraph& ag) {
    validate_annular(ag);
    detail::AnnularMap am = detail::analyze_annular(ag);
    const std::size_t nd = ag.dart_count();
    // directed strand states: (entry dart g, side L/R); passage accrues the
    // dart shift, corner hops accrue nothing. Encoded as 2*g + (side == R).
    auto next_state = [&](std::size_t state) {
        const Dart g = static_cast<Dart>(state >> 1);
        const bool right = state & 1u;
        const Dart exit = dart_mate(g);
        if (!right) return static_cast<std::size_t>(2 * am.sigma[exit] + 1); // (sigma(exit), R)
        return static_cast<std::size_t>(2 * am.sigma_inv[exit]);             // (sigma^{-1}(exit), L)
    };
    ClosedComponentsReport rep;
    std::vector<char> visited(2 * nd, 0);
    for (std::size_t s0 = 0; s0 < 2 * nd; ++s0) {
        if (visited[s0]) continue;
        std::int64_t w = 0;
        std::size_t s = s0;
        do {
            visited[s] = 1;
            w += ag.dart_shift(static_cast<Dart>(s >> 1));
            s = next_state(s);
        } while (s != s0);
        // the reverse traversal is a separate orbit with opposite winding;
        // count each undirected strand once by keeping nonnegative reps
        rep.strand_windings.push_back(w);
        if (w == 0) rep.strand_closed_component = true;
    }
    // orbits come in direction-reversed pairs
    rep.strand_orbit_count = rep.strand_windings.size() / 2;
    LaurentPoly delta = laplacian_polynomial(ag.graph);
    rep.delta_mod2 = mod_p_reduce(delta, 2);
    rep.mod2_zero = rep.delta_mod2.is_zero();
    return rep;
}

/// |leading coefficient of Delta_G|: the number of boundary-trivial tangle
/// colorings (top arcs colored 0) of the fundamental domain.
inline Int boundary_coloring_count(const PeriodicGraph& g) {
    if (g.dims != 1) throw std::invalid_argument("boundary_coloring_count: graph must be 1-periodic");
    LaurentPoly delta = laplacian_polynomial(g);
    if (delta.is_zero()) throw std::invalid_argument("boundary_coloring_count: Laplacian polynomial is zero");
    return abs(delta.terms().rbegin()->second);
}

} // namespace siglap
