#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "siglap/signed_graph.hpp"

namespace siglap {

/// Half-edge id: dart 2e sits at edge e's endpoint a, dart 2e+1 at endpoint b.
using Dart = std::uint32_t;

inline Dart dart_mate(Dart d) { return d ^ 1u; }

/// Signed graph with a combinatorial embedding: per vertex, the incident
/// darts in counterclockwise order, plus a dart whose left face is the
/// unbounded one. Faces are walked with face_next(d) = sigma^{-1}(mate(d)),
/// which keeps the face on the left of every dart it traverses.
struct PlaneGraph {
    SignedGraph graph;
    std::vector<std::vector<Dart>> rotations;
    Dart outer_dart = 0;

    std::size_t dart_count() const { return 2 * graph.edges.size(); }

    std::size_t dart_vertex(Dart d) const {
        const SignedEdge& e = graph.edges[d >> 1];
        return (d & 1u) ? e.b : e.a;
    }
};

namespace detail {

/// Flattened rotation system: sigma, sigma^{-1} and vertex lookup per dart.
struct MapStructure {
    std::vector<Dart> sigma, sigma_inv;
    std::vector<std::uint32_t> vertex_of;
    std::vector<std::uint32_t> face_of; // left face id per dart
    std::vector<std::vector<Dart>> faces;

    Dart face_next(Dart d) const { return sigma_inv[dart_mate(d)]; }
};

inline MapStructure analyze_map(const PlaneGraph& pg) {
    pg.graph.validate();
    const std::size_t nd = pg.dart_count();
    if (pg.rotations.size() != pg.graph.vertex_count)
        throw std::invalid_argument("PlaneGraph: one rotation list per vertex required");
    MapStructure ms;
    ms.sigma.assign(nd, 0);
    ms.sigma_inv.assign(nd, 0);
    ms.vertex_of.assign(nd, 0);
    std::vector<char> seen(nd, 0);
    for (std::size_t v = 0; v < pg.rotations.size(); ++v) {
        const std::vector<Dart>& cyc = pg.rotations[v];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Dart d = cyc[i];
            if (d >= nd) throw std::invalid_argument("PlaneGraph: dart id out of range");
            if (seen[d]) throw std::invalid_argument("PlaneGraph: dart listed twice");
            seen[d] = 1;
            if (pg.dart_vertex(d) != v)
                throw std::invalid_argument("PlaneGraph: dart listed at the wrong vertex");
            ms.vertex_of[d] = static_cast<std::uint32_t>(v);
            ms.sigma[d] = cyc[(i + 1) % cyc.size()];
            ms.sigma_inv[d] = cyc[(i + cyc.size() - 1) % cyc.size()];
        }
    }
    for (std::size_t d = 0; d < nd; ++d)
        if (!seen[d]) throw std::invalid_argument("PlaneGraph: dart missing from rotation system");
    ms.face_of.assign(nd, 0);
    std::vector<char> visited(nd, 0);
    for (Dart d0 = 0; d0 < nd; ++d0) {
        if (visited[d0]) continue;
        std::uint32_t id = static_cast<std::uint32_t>(ms.faces.size());
        ms.faces.emplace_back();
        Dart d = d0;
        do {
            visited[d] = 1;
            ms.face_of[d] = id;
            ms.faces[id].push_back(d);
            d = ms.face_next(d);
        } while (d != d0);
    }
    return ms;
}

inline bool graph_connected(const SignedGraph& g) {
    if (g.vertex_count == 0) return true;
    return connected_components(g).size() == 1;
}

} // namespace detail

/// Check the rotation data describes a connected plane embedding:
/// V - E + F must equal 2.
inline void validate_plane(const PlaneGraph& pg) {
    detail::MapStructure ms = detail::analyze_map(pg);
    if (!detail::graph_connected(pg.graph)) throw std::invalid_argument("PlaneGraph: graph is not connected");
    if (pg.graph.edges.empty()) throw std::invalid_argument("PlaneGraph: at least one edge required");
    const std::ptrdiff_t euler = static_cast<std::ptrdiff_t>(pg.graph.vertex_count) -
                                 static_cast<std::ptrdiff_t>(pg.graph.edges.size()) +
                                 static_cast<std::ptrdiff_t>(ms.faces.size());
    if (euler != 2) throw std::invalid_argument("PlaneGraph: rotation system is not planar (V - E + F != 2)");
    if (pg.outer_dart >= pg.dart_count()) throw std::invalid_argument("PlaneGraph: outer dart out of range");
}

/// Orientation-preserving isomorphism of embedded signed graphs, outer faces
/// matching. Tries every image of dart 0 and propagates through sigma/mate.
inline bool plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.graph.vertex_count != b.graph.vertex_count || a.graph.edges.size() != b.graph.edges.size())
        return false;
    if (a.graph.edges.empty()) return a.graph.vertex_count == b.graph.vertex_count;
    detail::MapStructure ma = detail::analyze_map(a), mb = detail::analyze_map(b);
    const std::size_t nd = a.dart_count();
    auto sign_of = [](const PlaneGraph& g, Dart d) { return g.graph.edges[d >> 1].sign; };
    for (Dart root = 0; root < nd; ++root) {
        if (sign_of(a, 0) != sign_of(b, root)) continue;
        std::vector<std::int64_t> img(nd, -1);
        std::vector<Dart> stack{0};
        img[0] = root;
        bool ok = true;
        while (!stack.empty() && ok) {
            Dart d = stack.back();
            stack.pop_back();
            Dart e = static_cast<Dart>(img[d]);
            const std::pair<Dart, Dart> steps[2] = {{ma.sigma[d], mb.sigma[e]},
                                                    {dart_mate(d), dart_mate(e)}};
            for (auto [nd_a, nd_b] : steps) {
                if (img[nd_a] < 0) {
                    if (sign_of(a, nd_a) != sign_of(b, nd_b)) {
                        ok = false;
                        break;
                    }
                    img[nd_a] = nd_b;
                    stack.push_back(nd_a);
                } else if (img[nd_a] != nd_b) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        for (std::size_t d = 0; d < nd && ok; ++d) ok = img[d] >= 0;
        if (!ok) continue; // disconnected inputs cannot be matched by propagation
        // sigma/mate closure forces a vertex-respecting bijection, so only
        // the outer face remains to check
        if (mb.face_of[static_cast<Dart>(img[a.outer_dart])] != mb.face_of[b.outer_dart]) continue;
        return true;
    }
    return false;
}

/// Finite rows x cols patch of the square grid, unsigned, with its standard
/// embedding; the unbounded face is the outer one.
inline PlaneGraph make_grid_patch(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1 || rows * cols < 2)
        throw std::invalid_argument("make_grid_patch: need at least two vertices");
    PlaneGraph pg;
    pg.graph.vertex_count = rows * cols;
    auto vid = [cols](std::size_t i, std::size_t j) { return i * cols + j; };
    // horizontal edges first (i, j)-(i, j+1), then vertical (i, j)-(i+1, j)
    std::vector<std::vector<std::int64_t>> east(rows, std::vector<std::int64_t>(cols, -1));
    std::vector<std::vector<std::int64_t>> south(rows, std::vector<std::int64_t>(cols, -1));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            east[i][j] = static_cast<std::int64_t>(pg.graph.edges.size());
            pg.graph.edges.push_back({vid(i, j), vid(i, j + 1), 1});
        }
    for (std::size_t i = 0; i + 1 < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            south[i][j] = static_cast<std::int64_t>(pg.graph.edges.size());
            pg.graph.edges.push_back({vid(i, j), vid(i + 1, j), 1});
        }
    pg.rotations.assign(pg.graph.vertex_count, {});
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            // ccw from east: east, north, west, south (x = j, y = -i)
            std::vector<Dart>& rot = pg.rotations[vid(i, j)];
            if (j + 1 < cols) rot.push_back(static_cast<Dart>(2 * east[i][j]));
            if (i > 0) rot.push_back(static_cast<Dart>(2 * south[i - 1][j] + 1));
            if (j > 0) rot.push_back(static_cast<Dart>(2 * east[i][j - 1] + 1));
            if (i + 1 < rows) rot.push_back(static_cast<Dart>(2 * south[i][j]));
        }
    }
    // outer face lies to the left of the top row walked eastward
    if (cols > 1)
        pg.outer_dart = static_cast<Dart>(2 * east[0][0]);
    else
        pg.outer_dart = static_cast<Dart>(2 * south[0][0]);
    validate_plane(pg);
    return pg;
}

} // namespace siglap
