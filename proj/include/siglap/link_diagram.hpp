#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "siglap/int_matrix.hpp"
#include "siglap/plane_graph.hpp"

namespace siglap {

/// Link diagram as a combinatorial map of its 4-valent universe. Diagram
/// darts are 4*crossing + slot with slots in counterclockwise order; the two
/// strands through a crossing occupy the opposite slot pairs (0,2) and (1,3).
/// over_pair is the slot parity (0 or 1) of the strand passing over. A medial
/// diagram of an edge with darts dA=2e, dB=2e+1 uses slot 0 = right side of
/// dB, 1 = left of dA, 2 = right of dA, 3 = left of dB.
struct LinkDiagram {
    std::size_t crossing_count = 0;
    std::vector<std::array<std::uint32_t, 2>> segments; // endpoint darts
    std::vector<int> over_pair;                         // per crossing
    std::vector<int> sign;                              // per crossing
    std::uint32_t outer_region_dart = 0;

    std::size_t dart_count() const { return 4 * crossing_count; }
};

namespace detail {

inline Dart medial_dart_left(Dart g_dart) {
    return static_cast<Dart>(4 * (g_dart >> 1) + ((g_dart & 1u) ? 3 : 1));
}
inline Dart medial_dart_right(Dart g_dart) {
    return static_cast<Dart>(4 * (g_dart >> 1) + ((g_dart & 1u) ? 0 : 2));
}

/// Regions, checkerboard shading, strands and arcs of a diagram.
struct DiagramStructure {
    std::vector<std::uint32_t> seg_at;  // dart -> segment
    std::vector<std::uint32_t> beta;    // dart -> other end of its segment
    std::vector<std::uint32_t> region_of;
    std::vector<std::vector<std::uint32_t>> regions;
    std::uint32_t outer_region = 0;
    std::vector<std::int8_t> shaded; // per region; outer unshaded
    std::vector<std::uint32_t> arc_of_segment;
    std::size_t arc_count = 0;
    std::size_t strand_count = 0;

    std::uint32_t region_next(std::uint32_t d) const {
        std::uint32_t m = beta[d];
        return (m & ~3u) | ((m + 3) & 3u); // sigma^{-1} within the crossing
    }
};

inline DiagramStructure analyze_diagram(const LinkDiagram& dg) {
    const std::size_t nd = dg.dart_count();
    DiagramStructure s;
    s.seg_at.assign(nd, UINT32_MAX);
    s.beta.assign(nd, 0);
    for (std::size_t k = 0; k < dg.segments.size(); ++k) {
        auto [d1, d2] = dg.segments[k];
        if (d1 >= nd || d2 >= nd || d1 == d2) throw std::invalid_argument("LinkDiagram: bad segment endpoints");
        if (s.seg_at[d1] != UINT32_MAX || s.seg_at[d2] != UINT32_MAX)
            throw std::invalid_argument("LinkDiagram: dart used by two segments");
        s.seg_at[d1] = s.seg_at[d2] = static_cast<std::uint32_t>(k);
        s.beta[d1] = d2;
        s.beta[d2] = d1;
    }
    for (std::size_t d = 0; d < nd; ++d)
        if (s.seg_at[d] == UINT32_MAX) throw std::invalid_argument("LinkDiagram: dart not covered by a segment");
    if (dg.over_pair.size() != dg.crossing_count || dg.sign.size() != dg.crossing_count)
        throw std::invalid_argument("LinkDiagram: per-crossing data size mismatch");

    // regions: left-face orbits
    s.region_of.assign(nd, 0);
    std::vector<char> visited(nd, 0);
    for (std::uint32_t d0 = 0; d0 < nd; ++d0) {
        if (visited[d0]) continue;
        std::uint32_t id = static_cast<std::uint32_t>(s.regions.size());
        s.regions.emplace_back();
        std::uint32_t d = d0;
        do {
            visited[d] = 1;
            s.region_of[d] = id;
            s.regions[id].push_back(d);
            d = s.region_next(d);
        } while (d != d0);
    }
    if (dg.outer_region_dart >= nd) throw std::invalid_argument("LinkDiagram: outer region dart out of range");
    s.outer_region = s.region_of[dg.outer_region_dart];

    // checkerboard shading, unbounded region unshaded
    s.shaded.assign(s.regions.size(), -1);
    std::vector<std::uint32_t> queue{s.outer_region};
    s.shaded[s.outer_region] = 0;
    while (!queue.empty()) {
        std::uint32_t r = queue.back();
        queue.pop_back();
        for (std::uint32_t d : s.regions[r]) {
            std::uint32_t other = s.region_of[s.beta[d]];
            if (s.shaded[other] < 0) {
                s.shaded[other] = !s.shaded[r];
                queue.push_back(other);
            } else if (s.shaded[other] == s.shaded[r]) {
                throw std::invalid_argument("LinkDiagram: universe is not checkerboard colorable");
            }
        }
    }
    for (char c : s.shaded)
        if (c < 0) throw std::invalid_argument("LinkDiagram: universe is not connected");

    // strands and arcs. Every dart is the arrival end of exactly one directed
    // passage; strand successor from arrival d is beta(d ^ 2) (cross to the
    // opposite slot, then ride the segment). Arcs break at under-arrivals.
    std::vector<char> seen(nd, 0);
    s.arc_of_segment.assign(dg.segments.size(), UINT32_MAX);
    std::uint32_t next_arc = 0;
    for (std::uint32_t d0 = 0; d0 < nd; ++d0) {
        if (seen[d0]) continue;
        ++s.strand_count;
        std::vector<std::uint32_t> orbit;
        std::uint32_t d = d0;
        do {
            orbit.push_back(d);
            seen[d] = 1;
            seen[d ^ 2] = 1; // the reverse direction arrives through the exit end
            d = s.beta[d ^ 2];
        } while (d != d0);
        auto is_under = [&](std::uint32_t arrival) {
            return static_cast<int>(arrival & 1u) != dg.over_pair[arrival >> 2];
        };
        std::ptrdiff_t first_cut = -1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            if (is_under(orbit[i])) {
                first_cut = static_cast<std::ptrdiff_t>(i);
                break;
            }
        if (first_cut < 0) {
            for (std::uint32_t a : orbit) s.arc_of_segment[s.seg_at[a]] = next_arc;
            ++next_arc;
            continue;
        }
        // walk from just after the first cut; a new arc starts after each cut
        std::uint32_t arc = next_arc++;
        const std::size_t n = orbit.size();
        for (std::size_t step = 1; step <= n; ++step) {
            std::uint32_t arrival = orbit[(static_cast<std::size_t>(first_cut) + step) % n];
            s.arc_of_segment[s.seg_at[arrival]] = arc;
            if (is_under(arrival) && step < n) arc = next_arc++;
        }
    }
    s.arc_count = next_arc;
    return s;
}

struct CrossingArcs {
    std::uint32_t over = 0, under1 = 0, under2 = 0;
};

inline CrossingArcs crossing_arcs(const LinkDiagram& dg, const DiagramStructure& s, std::size_t c) {
    const std::uint32_t base = static_cast<std::uint32_t>(4 * c);
    const std::uint32_t os = static_cast<std::uint32_t>(dg.over_pair[c]);
    CrossingArcs ca;
    ca.over = s.arc_of_segment[s.seg_at[base + os]];
    if (ca.over != s.arc_of_segment[s.seg_at[base + os + 2]])
        throw std::logic_error("LinkDiagram: over strand cut at its own crossing");
    ca.under1 = s.arc_of_segment[s.seg_at[base + (os ^ 1u)]];
    ca.under2 = s.arc_of_segment[s.seg_at[base + (os ^ 1u) + 2]];
    return ca;
}

} // namespace detail

/// Medial link diagram of a connected plane graph: one crossing per edge,
/// one segment per corner; the edge sign selects the over strand.
inline LinkDiagram medial_diagram(const PlaneGraph& pg) {
    validate_plane(pg);
    detail::MapStructure ms = detail::analyze_map(pg);
    for (const std::vector<Dart>& r : pg.rotations)
        if (r.empty()) throw std::invalid_argument("medial_diagram: isolated vertex");
    LinkDiagram dg;
    dg.crossing_count = pg.graph.edges.size();
    dg.segments.resize(pg.dart_count());
    for (Dart d = 0; d < pg.dart_count(); ++d)
        dg.segments[d] = {detail::medial_dart_left(d), detail::medial_dart_right(ms.sigma[d])};
    dg.over_pair.resize(dg.crossing_count);
    dg.sign.resize(dg.crossing_count);
    for (std::size_t e = 0; e < dg.crossing_count; ++e) {
        dg.sign[e] = pg.graph.edges[e].sign;
        dg.over_pair[e] = pg.graph.edges[e].sign > 0 ? 1 : 0;
    }
    dg.outer_region_dart = detail::medial_dart_right(ms.sigma[pg.outer_dart]);
    return dg;
}

/// Checkerboard graph of a diagram: a vertex in each shaded region, an edge
/// through each crossing. Inverse of medial_diagram including the embedding.
inline PlaneGraph tait_graph(const LinkDiagram& dg) {
    detail::DiagramStructure s = detail::analyze_diagram(dg);
    PlaneGraph pg;
    std::vector<std::int64_t> vertex_of_region(s.regions.size(), -1);
    for (std::size_t r = 0; r < s.regions.size(); ++r)
        if (s.shaded[r]) vertex_of_region[r] = static_cast<std::int64_t>(pg.graph.vertex_count++);

    std::vector<std::uint32_t> shaded_slot(dg.crossing_count); // smaller shaded corner slot
    for (std::size_t c = 0; c < dg.crossing_count; ++c) {
        const std::uint32_t base = static_cast<std::uint32_t>(4 * c);
        const bool sh0 = s.shaded[s.region_of[base + 0]];
        for (int k = 0; k < 4; ++k)
            if (s.shaded[s.region_of[base + k]] != ((k % 2 == 0) ? sh0 : !sh0))
                throw std::invalid_argument("tait_graph: corner shading does not alternate");
        const std::uint32_t s0 = sh0 ? 0u : 1u;
        shaded_slot[c] = s0;
        const std::size_t va = static_cast<std::size_t>(vertex_of_region[s.region_of[base + s0]]);
        const std::size_t vb = static_cast<std::size_t>(vertex_of_region[s.region_of[base + s0 + 2]]);
        const int sign = dg.over_pair[c] == static_cast<int>(s0) ? 1 : -1;
        pg.graph.edges.push_back({va, vb, sign});
    }

    pg.rotations.assign(pg.graph.vertex_count, {});
    for (std::size_t r = 0; r < s.regions.size(); ++r) {
        if (!s.shaded[r]) continue;
        std::vector<Dart>& rot = pg.rotations[static_cast<std::size_t>(vertex_of_region[r])];
        for (std::uint32_t d : s.regions[r]) {
            const std::uint32_t c = d >> 2, slot = d & 3u;
            rot.push_back(static_cast<Dart>(2 * c + (slot == shaded_slot[c] ? 0 : 1)));
        }
    }

    // the outer tait face is the diagram's unbounded (unshaded) region; the
    // tait dart with that region on its left sits at the corner s0+3
    bool outer_set = false;
    for (std::uint32_t d : s.regions[s.outer_region]) {
        const std::uint32_t c = d >> 2, slot = d & 3u;
        if (slot == ((shaded_slot[c] + 3) & 3u)) {
            pg.outer_dart = static_cast<Dart>(2 * c);
            outer_set = true;
            break;
        }
        if (slot == ((shaded_slot[c] + 1) & 3u)) {
            pg.outer_dart = static_cast<Dart>(2 * c + 1);
            outer_set = true;
            break;
        }
    }
    if (!outer_set) throw std::logic_error("tait_graph: could not locate the outer face");
    validate_plane(pg);
    return pg;
}

/// Dimension over Z/p of the Fox coloring space: one relation
/// 2*over = under1 + under2 per crossing.
inline std::size_t fox_coloring_dimension(const LinkDiagram& dg, std::uint64_t p) {
    if (p == 2) throw std::invalid_argument("fox_coloring_dimension: p must be an odd prime");
    require_prime(p, "fox_coloring_dimension");
    detail::DiagramStructure s = detail::analyze_diagram(dg);
    IntMatrix m(dg.crossing_count, s.arc_count);
    for (std::size_t c = 0; c < dg.crossing_count; ++c) {
        detail::CrossingArcs ca = detail::crossing_arcs(dg, s, c);
        m(c, ca.over) += 2;
        m(c, ca.under1) -= 1;
        m(c, ca.under2) -= 1;
    }
    return nullity_mod_p(m, p);
}

struct FoxColoring {
    std::vector<std::uint64_t> arc_colors;    // indexed as in medial_diagram's arcs
    std::vector<std::uint64_t> region_colors; // Dehn colors per diagram region
    std::size_t arc_count = 0;
};

/// Transport a graph p-coloring to a Fox p-coloring of the medial diagram:
/// shaded regions carry the vertex colors, unshaded region colors are solved
/// from the crossing relations with the unbounded region at 0, and each arc
/// receives the sum of its two neighbouring regions.
inline FoxColoring graph_coloring_to_fox(const PlaneGraph& pg, const std::vector<std::uint64_t>& vertex_colors,
                                         std::uint64_t p) {
    if (p == 2) throw std::invalid_argument("graph_coloring_to_fox: p must be an odd prime");
    require_prime(p, "graph_coloring_to_fox");
    if (vertex_colors.size() != pg.graph.vertex_count)
        throw std::invalid_argument("graph_coloring_to_fox: one color per vertex required");
    validate_plane(pg);
    // the input must satisfy the Laplacian condition mod p
    {
        IntMatrix L = laplacian_matrix(pg.graph);
        for (std::size_t i = 0; i < L.rows(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < L.cols(); ++j) acc += L(i, j) * Int(static_cast<unsigned long>(vertex_colors[j] % p));
            if (mpz_fdiv_ui(acc.get_mpz_t(), p) != 0)
                throw std::invalid_argument("graph_coloring_to_fox: not a valid graph coloring mod p");
        }
    }
    detail::MapStructure ms = detail::analyze_map(pg);
    LinkDiagram dg = medial_diagram(pg);
    detail::DiagramStructure s = detail::analyze_diagram(dg);

    // face colors: c(left face of d) - c(right face of d) = sign * (c(w) - c(v))
    const std::size_t nfaces = ms.faces.size();
    std::vector<std::int64_t> face_color(nfaces, -1);
    const std::uint32_t outer_face = ms.face_of[pg.outer_dart];
    face_color[outer_face] = 0;
    std::vector<std::uint32_t> queue{outer_face};
    while (!queue.empty()) {
        std::uint32_t f = queue.back();
        queue.pop_back();
        for (Dart d : ms.faces[f]) {
            // relation across edge of d, linking face_of(d)=f and face_of(mate)
            const std::uint32_t g = ms.face_of[dart_mate(d)];
            const SignedEdge& e = pg.graph.edges[d >> 1];
            const std::uint64_t cv = vertex_colors[pg.dart_vertex(d)] % p;
            const std::uint64_t cw = vertex_colors[pg.dart_vertex(dart_mate(d))] % p;
            const std::uint64_t diff = e.sign > 0 ? (cw + p - cv) % p : (cv + p - cw) % p;
            const std::int64_t expected = static_cast<std::int64_t>(
                (static_cast<std::uint64_t>(face_color[f]) + diff) % p);
            if (face_color[g] < 0) {
                face_color[g] = expected;
                queue.push_back(g);
            } else if (face_color[g] != expected) {
                throw std::logic_error("graph_coloring_to_fox: inconsistent Dehn relations");
            }
        }
    }

    FoxColoring out;
    out.arc_count = s.arc_count;
    out.region_colors.assign(s.regions.size(), 0);
    // region colors: vertex regions take vertex colors, face regions the solved ones
    for (Dart d = 0; d < pg.dart_count(); ++d) {
        out.region_colors[s.region_of[detail::medial_dart_left(d)]] = vertex_colors[pg.dart_vertex(d)] % p;
        out.region_colors[s.region_of[detail::medial_dart_right(ms.sigma[d])]] =
            static_cast<std::uint64_t>(face_color[ms.face_of[d]]);
    }
    // arc color = sum of the two region colors along any of its segments
    out.arc_colors.assign(s.arc_count, UINT64_MAX);
    for (Dart d = 0; d < pg.dart_count(); ++d) {
        const std::uint64_t col =
            (vertex_colors[pg.dart_vertex(d)] + static_cast<std::uint64_t>(face_color[ms.face_of[d]])) % p;
        const std::uint32_t arc = s.arc_of_segment[d]; // segment id == graph dart id
        if (out.arc_colors[arc] == UINT64_MAX)
            out.arc_colors[arc] = col;
        else if (out.arc_colors[arc] != col)
            throw std::logic_error("graph_coloring_to_fox: arc received two colors");
    }
    // every Fox relation must hold
    for (std::size_t c = 0; c < dg.crossing_count; ++c) {
        detail::CrossingArcs ca = detail::crossing_arcs(dg, s, c);
        if ((2 * out.arc_colors[ca.over]) % p !=
            (out.arc_colors[ca.under1] + out.arc_colors[ca.under2]) % p)
            throw std::logic_error("graph_coloring_to_fox: Fox relation violated");
    }
    return out;
}

/// det of the medial link = tree complexity of the graph (Mayberry-Mott).
inline Int link_determinant(const PlaneGraph& pg) {
    validate_plane(pg);
    return tree_complexity(pg.graph);
}

} // namespace siglap
