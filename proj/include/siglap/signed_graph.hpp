#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "siglap/int_matrix.hpp"
#include "siglap/smith.hpp"

namespace siglap {

struct SignedEdge {
    std::size_t a = 0, b = 0;
    int sign = 1;

    bool operator==(const SignedEdge&) const = default;
};

/// Finite multigraph with +-1 edge signs. Loops and parallel edges allowed.
struct SignedGraph {
    std::size_t vertex_count = 0;
    std::vector<SignedEdge> edges;

    void validate() const {
        for (const SignedEdge& e : edges) {
            if (e.a >= vertex_count || e.b >= vertex_count)
                throw std::invalid_argument("SignedGraph: edge endpoint out of range");
            if (e.sign != 1 && e.sign != -1)
                throw std::invalid_argument("SignedGraph: edge sign must be +1 or -1");
        }
    }
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace detail

/// Signed Laplacian L = delta - A. Loops cancel between delta and A and
/// contribute nothing here (the periodic lift is where they matter).
inline IntMatrix laplacian_matrix(const SignedGraph& g) {
    g.validate();
    IntMatrix L(g.vertex_count, g.vertex_count);
    for (const SignedEdge& e : g.edges) {
        if (e.a == e.b) continue;
        L(e.a, e.b) -= e.sign;
        L(e.b, e.a) -= e.sign;
        L(e.a, e.a) += e.sign;
        L(e.b, e.b) += e.sign;
    }
    return L;
}

/// Vertex sets of the connected components.
inline std::vector<std::vector<std::size_t>> connected_components(const SignedGraph& g) {
    detail::UnionFind uf(g.vertex_count);
    for (const SignedEdge& e : g.edges) uf.unite(e.a, e.b);
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::ptrdiff_t> slot(g.vertex_count, -1);
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        std::size_t root = uf.find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(slot[root])].push_back(v);
    }
    return comps;
}

/// Signed sum over maximal spanning forests, without the absolute value.
/// Exhaustive enumeration; the oracle behind tree_complexity.
inline Int spanning_forest_bruteforce(const SignedGraph& g) {
    g.validate();
    if (g.edges.size() > 24)
        throw std::invalid_argument("spanning_forest_bruteforce: more than 24 edges");
    const std::size_t comp_count = connected_components(g).size();
    const std::size_t target = g.vertex_count - comp_count;

    // loops are never in a forest
    std::vector<SignedEdge> edges;
    for (const SignedEdge& e : g.edges)
        if (e.a != e.b) edges.push_back(e);

    Int total = 0;
    // backtracking over edges with acyclicity pruning
    auto rec = [&](auto&& self, std::size_t idx, std::size_t count, detail::UnionFind uf, int sign) -> void {
        if (count == target) {
            total += sign;
            return;
        }
        if (idx == edges.size() || edges.size() - idx < target - count) return;
        detail::UnionFind with = uf;
        if (with.unite(edges[idx].a, edges[idx].b))
            self(self, idx + 1, count + 1, std::move(with), sign * edges[idx].sign);
        self(self, idx + 1, count, std::move(uf), sign);
    };
    rec(rec, 0, 0, detail::UnionFind(g.vertex_count), 1);
    return total;
}

/// |sum over spanning trees of the product of edge signs|, one factor per
/// connected component. Computed as the principal (n-1)x(n-1) minor of each
/// component Laplacian (signed matrix-tree theorem); the last row/column is
/// deleted.
inline Int tree_complexity(const SignedGraph& g) {
    g.validate();
    const std::vector<std::vector<std::size_t>> comps = connected_components(g);
    std::vector<std::size_t> comp_of(g.vertex_count, 0), index(g.vertex_count, 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (std::size_t k = 0; k < comps[c].size(); ++k) {
            comp_of[comps[c][k]] = c;
            index[comps[c][k]] = k;
        }
    std::vector<SignedGraph> subs(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) subs[c].vertex_count = comps[c].size();
    for (const SignedEdge& e : g.edges) {
        if (e.a == e.b) continue;
        subs[comp_of[e.a]].edges.push_back({index[e.a], index[e.b], e.sign});
    }
    Int result = 1;
    for (const SignedGraph& sub : subs) {
        if (sub.vertex_count <= 1) continue;
        IntMatrix L = laplacian_matrix(sub);
        Int minor = determinant(L.with_deleted(sub.vertex_count - 1, sub.vertex_count - 1));
        result *= abs(minor);
        if (result == 0) return 0;
    }
    return result;
}

/// Dimension over Z/p of the p-coloring space = nullity of L mod p.
inline std::size_t coloring_dimension_mod_p(const SignedGraph& g, std::uint64_t p) {
    if (p == 2) throw std::invalid_argument("coloring_dimension_mod_p: p must be an odd prime");
    require_prime(p, "coloring_dimension_mod_p");
    return nullity_mod_p(laplacian_matrix(g), p);
}

} // namespace siglap
