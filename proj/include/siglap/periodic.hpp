#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "siglap/laurent.hpp"
#include "siglap/signed_graph.hpp"
#include "siglap/smith.hpp"

namespace siglap {

struct PeriodicEdge {
    std::size_t from = 0, to = 0;
    std::vector<std::int64_t> shift; // translation in Z^d
    int sign = 1;

    bool operator==(const PeriodicEdge&) const = default;
};

/// Quotient data of a d-periodic graph: orbit vertices plus edge orbits
/// carrying translation vectors. The edge record (i, j, n, s) is the orbit of
/// edges v_{i,0} -- v_{j,n}; the reversed record (j, i, -n, s) denotes the
/// same orbit, and canonicalize() keeps the lexicographically smaller one.
struct PeriodicGraph {
    std::size_t dims = 1;
    std::size_t orbit_count = 0;
    std::vector<PeriodicEdge> edges;

    void validate() const {
        if (dims == 0) throw std::invalid_argument("PeriodicGraph: dims must be >= 1");
        for (const PeriodicEdge& e : edges) {
            if (e.from >= orbit_count || e.to >= orbit_count)
                throw std::invalid_argument("PeriodicGraph: edge endpoint out of range");
            if (e.shift.size() != dims)
                throw std::invalid_argument("PeriodicGraph: shift arity mismatch");
            if (e.sign != 1 && e.sign != -1)
                throw std::invalid_argument("PeriodicGraph: edge sign must be +1 or -1");
        }
    }

    void canonicalize() {
        for (PeriodicEdge& e : edges) {
            std::vector<std::int64_t> neg(e.shift.size());
            for (std::size_t k = 0; k < e.shift.size(); ++k) neg[k] = -e.shift[k];
            if (std::tie(e.to, e.from, neg) < std::tie(e.from, e.to, e.shift)) {
                std::swap(e.from, e.to);
                e.shift = std::move(neg);
            }
        }
    }

    /// True if some quotient loop has shift 0; such an edge lifts to loops at
    /// every vertex and contributes nothing to any Laplacian.
    bool has_flat_loop() const {
        for (const PeriodicEdge& e : edges)
            if (e.from == e.to && std::all_of(e.shift.begin(), e.shift.end(), [](std::int64_t v) { return v == 0; }))
                return true;
        return false;
    }
};

/// Laplacian matrix over the Laurent ring R_d. An edge (i, j, n, s) with
/// i != j puts -s x^n at (i,j), -s x^{-n} at (j,i) and s on both diagonals;
/// a loop (i, i, n, s) with n != 0 contributes the two inverse monomials
/// -s(x^n + x^{-n}) plus 2s on the diagonal.
inline LaurentMatrix laplacian_over_ring(const PeriodicGraph& g) {
    g.validate();
    LaurentMatrix L(g.orbit_count, g.orbit_count, g.dims);
    for (const PeriodicEdge& e : g.edges) {
        Exponent n(e.shift.begin(), e.shift.end());
        Exponent neg(n.size());
        for (std::size_t k = 0; k < n.size(); ++k) neg[k] = -n[k];
        const Int s = e.sign;
        if (e.from == e.to) {
            if (std::all_of(n.begin(), n.end(), [](std::int64_t v) { return v == 0; })) continue;
            L(e.from, e.from).add_term(n, -s);
            L(e.from, e.from).add_term(neg, -s);
            L(e.from, e.from).add_term(Exponent(g.dims, 0), 2 * s);
        } else {
            L(e.from, e.to).add_term(n, -s);
            L(e.to, e.from).add_term(neg, -s);
            L(e.from, e.from).add_term(Exponent(g.dims, 0), s);
            L(e.to, e.to).add_term(Exponent(g.dims, 0), s);
        }
    }
    return L;
}

inline LaurentPoly laplacian_polynomial(const PeriodicGraph& g) {
    return determinant_over_laurent(laplacian_over_ring(g));
}

/// Finite-index sublattice of Z^d, columns of basis generating it.
/// For d=1 this is just the index r.
struct Sublattice {
    std::size_t dims = 1;
    IntMatrix basis;

    static Sublattice cyclic(std::uint64_t r) {
        Sublattice s;
        s.dims = 1;
        s.basis = IntMatrix(1, 1);
        s.basis(0, 0) = static_cast<unsigned long>(r);
        return s;
    }

    static Sublattice diagonal(std::vector<std::uint64_t> ns) {
        Sublattice s;
        s.dims = ns.size();
        s.basis = IntMatrix(ns.size(), ns.size());
        for (std::size_t k = 0; k < ns.size(); ++k) s.basis(k, k) = static_cast<unsigned long>(ns[k]);
        return s;
    }

    Int index() const { return abs(determinant(basis)); }
};

namespace detail {

/// Coset arithmetic for Z^d / Lambda via the Smith form of the basis:
/// U * B * V = diag(D) maps the quotient to prod Z/D_k; cosets are tracked
/// as their canonical tuples in that coordinate system.
struct CosetSpace {
    std::vector<std::uint64_t> moduli; // D_1 | ... | D_d
    IntMatrix U;
    std::size_t count = 1;

    explicit CosetSpace(const Sublattice& lat) {
        if (lat.basis.rows() != lat.dims || lat.basis.cols() != lat.dims)
            throw std::invalid_argument("Sublattice: basis must be d x d");
        if (determinant(lat.basis) == 0) throw std::invalid_argument("Sublattice: basis is singular");
        SmithTransforms st = smith_with_transforms(lat.basis);
        U = st.U;
        for (const Int& d : st.diagonal) {
            std::uint64_t m = mpz_get_ui(d.get_mpz_t());
            moduli.push_back(m);
            count *= m;
        }
    }

    /// Image of an integer vector in the canonical tuple coordinates.
    std::vector<std::uint64_t> reduce(const std::vector<std::int64_t>& v) const {
        std::vector<std::uint64_t> t(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < moduli.size(); ++j) acc += U(i, j) * Int(static_cast<long>(v[j]));
            t[i] = mpz_fdiv_ui(acc.get_mpz_t(), moduli[i]);
        }
        return t;
    }

    std::size_t tuple_index(const std::vector<std::uint64_t>& t) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < t.size(); ++i) idx = idx * moduli[i] + t[i];
        return idx;
    }

    std::size_t add(std::size_t coset, const std::vector<std::uint64_t>& shift_t) const {
        std::vector<std::uint64_t> t(moduli.size());
        std::size_t rem = coset;
        for (std::size_t i = moduli.size(); i-- > 0;) {
            t[i] = rem % moduli[i];
            rem /= moduli[i];
        }
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = (t[i] + shift_t[i]) % moduli[i];
        return tuple_index(t);
    }
};

} // namespace detail

/// Finite quotient G_Lambda by explicit coset unfolding: vertices are
/// (orbit, coset) with id = orbit * index + coset, one lifted edge per coset.
inline SignedGraph quotient_graph(const PeriodicGraph& g, const Sublattice& lat) {
    g.validate();
    if (lat.dims != g.dims) throw std::invalid_argument("quotient_graph: lattice dimension mismatch");
    detail::CosetSpace cs(lat);
    const std::size_t idx = cs.count;
    SignedGraph q;
    q.vertex_count = g.orbit_count * idx;
    for (const PeriodicEdge& e : g.edges) {
        std::vector<std::uint64_t> sh = cs.reduce(e.shift);
        for (std::size_t c = 0; c < idx; ++c) {
            std::size_t c2 = cs.add(c, sh);
            q.edges.push_back({e.from * idx + c, e.to * idx + c2, e.sign});
        }
    }
    return q;
}

inline SignedGraph quotient_graph(const PeriodicGraph& g, std::uint64_t r) {
    if (g.dims != 1) throw std::invalid_argument("quotient_graph(r): graph is not 1-periodic");
    if (r == 0) throw std::invalid_argument("quotient_graph: r must be positive");
    return quotient_graph(g, Sublattice::cyclic(r));
}

/// Cycle-rooted spanning forest expansion of the Laplacian polynomial:
/// sum over CRSFs of the quotient of prod(signs) * prod over cycles of
/// (2 - x^c - x^{-c}), c the cycle's net shift. Exhaustive; the independent
/// oracle for laplacian_polynomial.
inline LaurentPoly crsf_polynomial_oracle(const PeriodicGraph& g) {
    g.validate();
    if (g.edges.size() > 16) throw std::invalid_argument("crsf_polynomial_oracle: more than 16 edge orbits");
    const std::size_t n = g.orbit_count, m = g.edges.size();
    LaurentPoly total(g.dims);
    if (m < n) return total; // no CRSF can cover all vertices
    std::vector<std::size_t> sub(n);
    // iterate over all n-subsets of edges
    for (std::size_t k = 0; k < n; ++k) sub[k] = k;
    while (true) {
        // each component must have #edges == #vertices (exactly one cycle)
        detail::UnionFind uf(n);
        for (std::size_t k : sub) uf.unite(g.edges[k].from, g.edges[k].to);
        std::vector<std::size_t> vcnt(n, 0), ecnt(n, 0);
        for (std::size_t v = 0; v < n; ++v) ++vcnt[uf.find(v)];
        for (std::size_t k : sub) ++ecnt[uf.find(g.edges[k].from)];
        bool crsf = true;
        for (std::size_t v = 0; v < n && crsf; ++v)
            if (vcnt[v] != ecnt[v]) crsf = false;
        if (crsf) {
            // per component: spanning-tree potentials give the unique cycle's
            // net shift as the defect of the one extra edge
            int sign = 1;
            for (std::size_t k : sub) sign *= g.edges[k].sign;
            LaurentPoly term = LaurentPoly::constant(g.dims, sign);
            std::vector<std::vector<std::pair<std::size_t, int>>> adj(n); // (edge, orientation)
            for (std::size_t k : sub) {
                adj[g.edges[k].from].push_back({k, +1});
                adj[g.edges[k].to].push_back({k, -1});
            }
            std::vector<char> vseen(n, 0), eseen(m, 0);
            std::vector<Exponent> pot(n, Exponent(g.dims, 0));
            for (std::size_t root = 0; root < n && !term.is_zero(); ++root) {
                if (vseen[root]) continue;
                std::vector<std::size_t> stack{root};
                vseen[root] = 1;
                std::vector<Exponent> cycles;
                while (!stack.empty()) {
                    std::size_t u = stack.back();
                    stack.pop_back();
                    for (auto [k, orient] : adj[u]) {
                        if (eseen[k]) continue;
                        eseen[k] = 1;
                        const PeriodicEdge& e = g.edges[k];
                        std::size_t w = orient > 0 ? e.to : e.from;
                        Exponent step(g.dims);
                        for (std::size_t t = 0; t < g.dims; ++t)
                            step[t] = pot[u][t] + orient * e.shift[t];
                        if (!vseen[w]) {
                            vseen[w] = 1;
                            pot[w] = step;
                            stack.push_back(w);
                        } else {
                            Exponent conn(g.dims);
                            for (std::size_t t = 0; t < g.dims; ++t) conn[t] = step[t] - pot[w][t];
                            cycles.push_back(std::move(conn));
                        }
                    }
                }
                for (const Exponent& c : cycles) {
                    LaurentPoly factor = LaurentPoly::constant(g.dims, 2);
                    Exponent neg(g.dims);
                    for (std::size_t t = 0; t < g.dims; ++t) neg[t] = -c[t];
                    factor.add_term(c, -1);
                    factor.add_term(neg, -1);
                    term *= factor; // zero when the connection is trivial
                }
            }
            total += term;
        }
        // next subset
        std::size_t pos = n;
        while (pos > 0 && sub[pos - 1] == m - (n - pos) - 1) --pos;
        if (pos == 0) break;
        ++sub[pos - 1];
        for (std::size_t k = pos; k < n; ++k) sub[k] = sub[k - 1] + 1;
    }
    return total;
}

struct ComponentOrbit {
    PeriodicGraph graph;                // reindexed piece, same dims
    std::vector<std::size_t> orbit_ids; // original orbit indices
    std::size_t stabilizer_rank = 0;    // rank of the lattice generated by cycle shifts
    bool finite_components = false;     // stabilizer trivial <=> lifted components finite
};

/// Partition into Z^d-orbit-connected pieces. Each connected component of the
/// quotient is one component orbit of the lift; its lifted components are
/// finite exactly when the net shifts of a cycle basis generate the trivial
/// subgroup of Z^d.
inline std::vector<ComponentOrbit> component_orbits(const PeriodicGraph& g) {
    g.validate();
    detail::UnionFind uf(g.orbit_count);
    for (const PeriodicEdge& e : g.edges) uf.unite(e.from, e.to);
    std::vector<std::ptrdiff_t> slot(g.orbit_count, -1);
    std::vector<ComponentOrbit> out;
    std::vector<std::size_t> local(g.orbit_count, 0);
    for (std::size_t v = 0; v < g.orbit_count; ++v) {
        std::size_t root = uf.find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(out.size());
            out.emplace_back();
            out.back().graph.dims = g.dims;
        }
        ComponentOrbit& co = out[static_cast<std::size_t>(slot[root])];
        local[v] = co.graph.orbit_count++;
        co.orbit_ids.push_back(v);
    }
    for (const PeriodicEdge& e : g.edges) {
        ComponentOrbit& co = out[static_cast<std::size_t>(slot[uf.find(e.from)])];
        co.graph.edges.push_back({local[e.from], local[e.to], e.shift, e.sign});
    }
    // cycle-shift lattice per piece via spanning-tree potentials
    for (ComponentOrbit& co : out) {
        const PeriodicGraph& pg = co.graph;
        std::vector<std::vector<std::pair<std::size_t, int>>> adj(pg.orbit_count);
        for (std::size_t k = 0; k < pg.edges.size(); ++k) {
            adj[pg.edges[k].from].push_back({k, +1});
            adj[pg.edges[k].to].push_back({k, -1});
        }
        std::vector<char> vseen(pg.orbit_count, 0), eseen(pg.edges.size(), 0);
        std::vector<std::vector<std::int64_t>> pot(pg.orbit_count, std::vector<std::int64_t>(pg.dims, 0));
        std::vector<std::vector<std::int64_t>> cycle_shifts;
        std::vector<std::size_t> stack{0};
        vseen[0] = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (auto [k, orient] : adj[u]) {
                if (eseen[k]) continue;
                eseen[k] = 1;
                const PeriodicEdge& e = pg.edges[k];
                std::size_t w = orient > 0 ? e.to : e.from;
                std::vector<std::int64_t> step(pg.dims);
                for (std::size_t t = 0; t < pg.dims; ++t) step[t] = pot[u][t] + orient * e.shift[t];
                if (!vseen[w]) {
                    vseen[w] = 1;
                    pot[w] = step;
                    stack.push_back(w);
                } else {
                    std::vector<std::int64_t> conn(pg.dims);
                    bool nonzero = false;
                    for (std::size_t t = 0; t < pg.dims; ++t) {
                        conn[t] = step[t] - pot[w][t];
                        nonzero = nonzero || conn[t] != 0;
                    }
                    if (nonzero) cycle_shifts.push_back(std::move(conn));
                }
            }
        }
        if (cycle_shifts.empty()) {
            co.stabilizer_rank = 0;
        } else {
            IntMatrix sm(cycle_shifts.size(), pg.dims);
            for (std::size_t i = 0; i < cycle_shifts.size(); ++i)
                for (std::size_t j = 0; j < pg.dims; ++j) sm(i, j) = static_cast<long>(cycle_shifts[i][j]);
            co.stabilizer_rank = smith_normal_form(sm).rank;
        }
        co.finite_components = co.stabilizer_rank == 0;
    }
    return out;
}

/// d-dimensional grid graph: one orbit, one loop per axis with unit shift.
inline PeriodicGraph grid_graph(std::size_t d) {
    if (d == 0) throw std::invalid_argument("grid_graph: d must be >= 1");
    PeriodicGraph g;
    g.dims = d;
    g.orbit_count = 1;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<std::int64_t> shift(d, 0);
        shift[k] = 1;
        g.edges.push_back({0, 0, std::move(shift), 1});
    }
    return g;
}

/// Single-orbit 1-periodic graph whose Laplacian polynomial is exactly
/// p(x) = (x - 2 + x^{-1}) f(x): expand p as sum a_s (x^s - 2 + x^{-s}) and
/// emit |a_s| loops of winding s with sign -sign(a_s).
inline PeriodicGraph realize_palindromic(const LaurentPoly& f) {
    if (f.vars() != 1) throw std::invalid_argument("realize_palindromic: univariate polynomial required");
    if (f.is_zero()) throw std::invalid_argument("realize_palindromic: zero polynomial");
    if (!is_palindromic(f)) throw std::invalid_argument("realize_palindromic: polynomial is not palindromic");
    LaurentPoly window(1);
    window.add_term({1}, 1);
    window.add_term({0}, -2);
    window.add_term({-1}, 1);
    LaurentPoly p = window * f;
    PeriodicGraph g;
    g.dims = 1;
    g.orbit_count = 1;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] <= 0) continue;
        const int sign = c > 0 ? -1 : 1;
        for (Int k = 0; k < abs(c); ++k) g.edges.push_back({0, 0, {e[0]}, sign});
    }
    return g;
}

} // namespace siglap
