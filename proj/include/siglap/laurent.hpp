#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "siglap/int_matrix.hpp"

namespace siglap {

using Exponent = std::vector<std::int64_t>;

/// Integer Laurent polynomial in a fixed number of variables. Terms are kept
/// in a map ordered lexicographically on exponent vectors; zero coefficients
/// are never stored, so the representation is canonical. vars()==0 is a plain
/// integer, which makes finite graphs the degenerate case of periodic ones.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t vars = 0) : vars_(vars) {}

    static LaurentPoly constant(std::size_t vars, Int c) {
        LaurentPoly p(vars);
        p.add_term(Exponent(vars, 0), std::move(c));
        return p;
    }

    static LaurentPoly monomial(std::size_t vars, Exponent e, Int c) {
        LaurentPoly p(vars);
        if (e.size() != vars) throw std::invalid_argument("LaurentPoly::monomial: exponent arity mismatch");
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    /// Univariate c * x^e.
    static LaurentPoly x_power(std::int64_t e, Int c = 1) { return monomial(1, {e}, std::move(c)); }

    std::size_t vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Int>& terms() const { return terms_; }

    const Int& coeff(const Exponent& e) const {
        static const Int zero = 0;
        auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(Exponent e, const Int& c) {
        if (e.size() != vars_) throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    LaurentPoly operator-() const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_vars(b);
        LaurentPoly r(a.vars_);
        Exponent e(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < a.vars_; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const Int& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }
    friend LaurentPoly operator*(const Int& c, LaurentPoly a) { return a *= c; }

    /// Multiply by the monomial c * x^e.
    LaurentPoly scaled_by_monomial(const Exponent& e, const Int& c) const {
        if (e.size() != vars_) throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
        LaurentPoly r(vars_);
        if (c == 0) return r;
        Exponent f(vars_);
        for (const auto& [te, tc] : terms_) {
            for (std::size_t k = 0; k < vars_; ++k) f[k] = te[k] + e[k];
            r.terms_.emplace(f, tc * c);
        }
        return r;
    }

private:
    void check_vars(const LaurentPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
    }

    std::size_t vars_;
    std::map<Exponent, Int> terms_;
};

/// x_k -> x_k^{-1} for every variable.
inline LaurentPoly invert_variables(const LaurentPoly& f) {
    LaurentPoly r(f.vars());
    for (const auto& [e, c] : f.terms()) {
        Exponent ne(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) ne[k] = -e[k];
        r.add_term(std::move(ne), c);
    }
    return r;
}

/// f / g when g divides f exactly, std::nullopt otherwise. Leading-term
/// cancellation in lex order; monomials are units, so failure shows up as an
/// inexact coefficient division or as a quotient exponent leaving the box it
/// must occupy (per coordinate, min and max exponents of an exact quotient
/// are fixed by those of f and g: extremal corners cannot cancel).
inline std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& f_in, const LaurentPoly& g) {
    if (f_in.vars() != g.vars()) throw std::invalid_argument("exact_divide: variable count mismatch");
    if (g.is_zero()) throw std::domain_error("exact_divide: division by zero");
    if (f_in.is_zero()) return LaurentPoly(f_in.vars());
    const std::size_t d = f_in.vars();
    Exponent qlo(d, 0), qhi(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        std::int64_t flo = 0, fhi = 0, glo = 0, ghi = 0;
        bool first = true;
        for (const auto& [e, c] : f_in.terms()) {
            flo = first ? e[k] : std::min(flo, e[k]);
            fhi = first ? e[k] : std::max(fhi, e[k]);
            first = false;
        }
        first = true;
        for (const auto& [e, c] : g.terms()) {
            glo = first ? e[k] : std::min(glo, e[k]);
            ghi = first ? e[k] : std::max(ghi, e[k]);
            first = false;
        }
        qlo[k] = flo - glo;
        qhi[k] = fhi - ghi;
        if (qlo[k] > qhi[k]) return std::nullopt;
    }
    LaurentPoly f = f_in, q(d);
    const auto& glead = *g.terms().rbegin();
    while (!f.is_zero()) {
        const auto& flead = *f.terms().rbegin();
        if (!mpz_divisible_p(flead.second.get_mpz_t(), glead.second.get_mpz_t())) return std::nullopt;
        Exponent e(d);
        for (std::size_t k = 0; k < d; ++k) {
            e[k] = flead.first[k] - glead.first[k];
            if (e[k] < qlo[k] || e[k] > qhi[k]) return std::nullopt;
        }
        Int c = exact_div(flead.second, glead.second);
        q.add_term(e, c);
        f -= g.scaled_by_monomial(e, c);
    }
    return q;
}

inline LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
    std::optional<LaurentPoly> q = try_exact_divide(f, g);
    if (!q) throw std::domain_error("exact_divide: divisor does not divide exactly");
    return *std::move(q);
}

inline LaurentPoly mod_p_reduce(const LaurentPoly& f, std::uint64_t p) {
    require_prime(p, "mod_p_reduce");
    LaurentPoly r(f.vars());
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t v = mpz_fdiv_ui(c.get_mpz_t(), p);
        if (v != 0) r.add_term(e, Int(static_cast<unsigned long>(v)));
    }
    return r;
}

/// f(x^{-1}) == f(x); univariate only.
inline bool is_palindromic(const LaurentPoly& f) {
    if (f.vars() != 1) throw std::invalid_argument("is_palindromic: univariate polynomial required");
    return f == invert_variables(f);
}

/// The unit-class representative +-x^k * f with lowest exponent 0 and
/// positive leading coefficient. Every "equal up to units" comparison in the
/// suite goes through this form.
inline LaurentPoly canonical_unit_form(const LaurentPoly& f) {
    if (f.vars() != 1) throw std::invalid_argument("canonical_unit_form: univariate polynomial required");
    if (f.is_zero()) throw std::invalid_argument("canonical_unit_form: zero polynomial");
    const std::int64_t lo = f.terms().begin()->first[0];
    const bool negate = f.terms().rbegin()->second < 0;
    LaurentPoly r(1);
    for (const auto& [e, c] : f.terms()) r.add_term({e[0] - lo}, negate ? Int(-c) : c);
    return r;
}

inline std::complex<double> evaluate(const LaurentPoly& f, std::span<const std::complex<double>> point) {
    if (point.size() != f.vars()) throw std::invalid_argument("evaluate: point arity mismatch");
    for (const std::complex<double>& z : point)
        if (z == std::complex<double>(0.0, 0.0)) throw std::invalid_argument("evaluate: zero coordinate");
    auto power = [](std::complex<double> z, std::int64_t e) {
        if (e < 0) {
            z = 1.0 / z;
            e = -e;
        }
        std::complex<double> acc(1.0, 0.0);
        while (e) {
            if (e & 1) acc *= z;
            z *= z;
            e >>= 1;
        }
        return acc;
    };
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : f.terms()) {
        std::complex<double> t(c.get_d(), 0.0);
        for (std::size_t k = 0; k < f.vars(); ++k) t *= power(point[k], e[k]);
        sum += t;
    }
    return sum;
}

inline std::complex<double> evaluate(const LaurentPoly& f, std::initializer_list<std::complex<double>> point) {
    return evaluate(f, std::span<const std::complex<double>>(point.begin(), point.size()));
}

inline std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool allzero = true;
        for (std::int64_t v : e) allzero = allzero && v == 0;
        if (a != 1 || allzero) os << a.get_str();
        bool coef_printed = a != 1 || allzero;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (coef_printed) os << "*";
            coef_printed = true;
            os << (f.vars() == 1 ? std::string("x") : "x" + std::to_string(k + 1));
            if (e[k] != 1) os << "^" << e[k];
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

/// Matrix over the Laurent ring.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t vars)
        : rows_(rows), cols_(cols), vars_(vars), data_(rows * cols, LaurentPoly(vars)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t vars() const { return vars_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const LaurentMatrix& o) const = default;

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_ = 0, cols_ = 0, vars_ = 0;
    std::vector<LaurentPoly> data_;
};

/// Exact determinant over the ring: fraction-free Bareiss elimination, with
/// the exact divisions carried out by leading-term cancellation.
inline LaurentPoly determinant_over_laurent(const LaurentMatrix& m_in) {
    if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant_over_laurent: matrix is not square");
    const std::size_t n = m_in.rows();
    if (n == 0) return LaurentPoly::constant(m_in.vars(), 1);
    LaurentMatrix m = m_in;
    LaurentPoly prev = LaurentPoly::constant(m.vars(), 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t piv = k;
            while (piv < n && m(piv, k).is_zero()) ++piv;
            if (piv == n) return LaurentPoly(m.vars());
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = LaurentPoly(m.vars());
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

} // namespace siglap
