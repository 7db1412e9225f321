#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "siglap/int_matrix.hpp"
#include "siglap/laurent.hpp"

namespace siglap {

/// Word in the braid group B_k: letters are signed generator indices,
/// +i for sigma_i, -i for its inverse, 1 <= i < strand_count.
struct BraidWord {
    std::size_t strand_count = 2;
    std::vector<int> letters;

    void validate() const {
        if (strand_count < 2) throw std::invalid_argument("BraidWord: at least two strands");
        for (int g : letters) {
            if (g == 0 || static_cast<std::size_t>(std::abs(g)) >= strand_count)
                throw std::invalid_argument("BraidWord: generator index out of range");
        }
    }
};

/// Product of the unreduced Burau blocks at t = -1: sigma_i acts by
/// [[2,-1],[1,0]] on strands (i, i+1), its inverse by [[0,1],[-1,2]].
inline IntMatrix burau_matrix_at_minus1(const BraidWord& w) {
    w.validate();
    const std::size_t k = w.strand_count;
    IntMatrix m = IntMatrix::identity(k);
    for (int g : w.letters) {
        const std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;
        // multiply m by the block on the right: only columns i, i+1 change
        for (std::size_t r = 0; r < k; ++r) {
            Int a = m(r, i), b = m(r, i + 1);
            if (g > 0) {
                m(r, i) = 2 * a + b;
                m(r, i + 1) = -a;
            } else {
                m(r, i) = -b;
                m(r, i + 1) = a + 2 * b;
            }
        }
    }
    return m;
}

/// Characteristic polynomial det(xI - B) of the Burau matrix at t = -1,
/// as a Laurent polynomial in x. For the closure of a 2n-braid this equals
/// the Laplacian polynomial of the associated 1-periodic Tait graph up to
/// units and cyclotomic factors.
inline LaurentPoly burau_laplacian(const BraidWord& w) {
    w.validate();
    if (w.strand_count % 2 != 0)
        throw std::invalid_argument("burau_laplacian: even strand count required");
    IntMatrix b = burau_matrix_at_minus1(w);
    const std::size_t k = w.strand_count;
    LaurentMatrix m(k, k, 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            LaurentPoly entry(1);
            if (i == j) entry.add_term({1}, 1);
            entry.add_term({0}, -b(i, j));
            m(i, j) = std::move(entry);
        }
    return determinant_over_laurent(m);
}

} // namespace siglap
