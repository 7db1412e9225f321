#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "siglap/int_matrix.hpp"

namespace siglap {

/// Finitely generated abelian group: free rank plus invariant-factor chain
/// d_1 | d_2 | ... | d_k with every d_i >= 2.
struct AbelianGroupStructure {
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;

    Int torsion_order() const {
        Int t = 1;
        for (const Int& d : invariant_factors) t *= d;
        return t;
    }

    bool operator==(const AbelianGroupStructure&) const = default;
};

struct SmithResult {
    std::vector<Int> invariant_factors; // entries > 1 only, divisibility chain
    std::size_t rank = 0;               // number of nonzero diagonal entries
};

namespace detail {

// Diagonalize m in place by unimodular row/column operations. Pivot choice:
// nonzero entry of minimal absolute value in the working submatrix, which
// keeps intermediate entries small. Optionally accumulates the transforms
// U (rows) and V (cols) with U * M * V = diag.
inline std::vector<Int> smith_diagonal(IntMatrix& m, IntMatrix* U, IntMatrix* V) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (U) *U = IntMatrix::identity(rows);
    if (V) *V = IntMatrix::identity(cols);

    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < cols; ++j) m(dst, j) += f * m(src, j);
        if (U)
            for (std::size_t j = 0; j < rows; ++j) (*U)(dst, j) += f * (*U)(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) m(i, dst) += f * m(i, src);
        if (V)
            for (std::size_t i = 0; i < cols; ++i) (*V)(i, dst) += f * (*V)(i, src);
    };
    auto swap_row = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        m.swap_rows(a, b);
        if (U) U->swap_rows(a, b);
    };
    auto swap_col = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
        if (V)
            for (std::size_t i = 0; i < cols; ++i) std::swap((*V)(i, a), (*V)(i, b));
    };

    std::vector<Int> diag;
    std::size_t t = 0;
    const std::size_t lim = std::min(rows, cols);
    while (t < lim) {
        // locate minimal-|.|` nonzero entry in m[t.., t..]
        bool found = false;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m(i, j) != 0 && (!found || mpz_cmpabs(m(i, j).get_mpz_t(), m(bi, bj).get_mpz_t()) < 0)) {
                    found = true;
                    bi = i;
                    bj = j;
                }
        if (!found) break;
        swap_row(t, bi);
        swap_col(t, bj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Int q = m(i, t) / m(t, t); // truncated; remainder re-pivoted below
                add_row(i, t, -q);
                if (m(i, t) != 0) {
                    swap_row(t, i); // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Int q = m(t, j) / m(t, t);
                add_col(j, t, -q);
                if (m(t, j) != 0) {
                    swap_col(t, j);
                    clean = false;
                }
            }
        }
        // divisibility: pivot must divide every remaining entry
        bool restart = false;
        for (std::size_t i = t + 1; i < rows && !restart; ++i)
            for (std::size_t j = t + 1; j < cols && !restart; ++j)
                if (m(i, j) % m(t, t) != 0) {
                    add_row(t, i, 1);
                    restart = true;
                }
        if (restart) continue;
        diag.push_back(m(t, t) < 0 ? Int(-m(t, t)) : m(t, t));
        ++t;
    }
    return diag;
}

} // namespace detail

inline SmithResult smith_normal_form(const IntMatrix& m_in) {
    IntMatrix m = m_in;
    std::vector<Int> diag = detail::smith_diagonal(m, nullptr, nullptr);
    SmithResult r;
    r.rank = diag.size();
    for (Int& d : diag)
        if (d > 1) r.invariant_factors.push_back(std::move(d));
    return r;
}

/// U * M * V = diag(diagonal), U and V unimodular.
struct SmithTransforms {
    std::vector<Int> diagonal; // all nonzero entries, divisibility chain
    IntMatrix U, V;
};

inline SmithTransforms smith_with_transforms(const IntMatrix& m_in) {
    IntMatrix m = m_in;
    SmithTransforms st;
    st.diagonal = detail::smith_diagonal(m, &st.U, &st.V);
    return st;
}

inline AbelianGroupStructure cokernel_structure(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    return AbelianGroupStructure{m.cols() - s.rank, std::move(s.invariant_factors)};
}

inline Int torsion_complexity(const IntMatrix& m) {
    return cokernel_structure(m).torsion_order();
}

} // namespace siglap
