#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace siglap {

/// Arbitrary-precision integer. All exact kernels work over this type;
/// 64-bit intermediates overflow already for the growth experiments.
using Int = mpz_class;

/// q = n / d where d is known to divide n exactly.
inline Int exact_div(const Int& n, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t acc = 1;
        a %= m;
        while (e) {
            if (e & 1) acc = mulmod(acc, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return acc;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline void require_prime(std::uint64_t p, const char* what) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Copy with one row and one column removed.
    IntMatrix with_deleted(std::size_t row, std::size_t col) const {
        IntMatrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, ti = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, tj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m(ti, tj) = (*this)(i, j);
                ++tj;
            }
            ++ti;
        }
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Int determinant(const IntMatrix& m_in) {
    if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m_in.rows();
    if (n == 0) return 1;
    IntMatrix m = m_in;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

/// Rank over GF(p) by Gaussian elimination on the mod-p image.
inline std::size_t rank_mod_p(const IntMatrix& m_in, std::uint64_t p) {
    require_prime(p, "rank_mod_p");
    const std::size_t rows = m_in.rows(), cols = m_in.cols();
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = mpz_fdiv_ui(m_in(i, j).get_mpz_t(), p);
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = mulmod(acc, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return acc;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const std::uint64_t inv = powmod(m[rank][col], p - 2);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = mulmod(m[rank][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const std::uint64_t f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, m[rank][j]);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

inline std::size_t nullity_mod_p(const IntMatrix& m, std::uint64_t p) {
    return m.cols() - rank_mod_p(m, p);
}

} // namespace siglap
