#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "siglap/errors.hpp"
#include "siglap/laurent.hpp"
#include "siglap/periodic.hpp"
#include "siglap/smith.hpp"

namespace siglap {

enum class MahlerMethod { jensen_roots, torus_quadrature };

struct MahlerResult {
    double log_measure = 0.0;
    double measure = 1.0;
    MahlerMethod method = MahlerMethod::jensen_roots;
    double error_estimate = 0.0;
    std::vector<std::complex<double>> roots; // jensen diagnostics (cyclotomic-free part)
    std::vector<std::size_t> grid_sizes;     // quadrature diagnostics
};

/// log of a positive big integer, exact exponent split.
inline double log_int(const Int& v) {
    if (v <= 0) throw std::invalid_argument("log_int: positive integer required");
    long e = 0;
    double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

namespace detail {

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// nth cyclotomic polynomial as a univariate LaurentPoly (exponents 0..phi(n)).
inline LaurentPoly cyclotomic(std::uint64_t n, std::map<std::uint64_t, LaurentPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    LaurentPoly xn(1);
    xn.add_term({static_cast<std::int64_t>(n)}, 1);
    xn.add_term({0}, -1);
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0) xn = exact_divide(xn, cyclotomic(d, memo));
    memo.emplace(n, xn);
    return xn;
}

/// Aberth-Ehrlich simultaneous root iteration on c0 + c1 x + ... + cs x^s.
inline std::vector<std::complex<long double>> aberth_roots(const std::vector<Int>& coeffs) {
    const std::size_t deg = coeffs.size() - 1;
    std::vector<std::complex<long double>> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = static_cast<long double>(coeffs[i].get_d());
    auto eval = [&](std::complex<long double> z, std::complex<long double>& p, std::complex<long double>& dp) {
        p = c[deg];
        dp = 0;
        for (std::size_t i = deg; i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
        }
    };
    const long double pi = 3.14159265358979323846264338327950288L;
    long double radius = std::pow(std::abs(c[0] / c[deg]), 1.0L / static_cast<long double>(deg));
    if (!(radius > 0.0L)) radius = 1.0L;
    std::vector<std::complex<long double>> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        long double ang = 2.0L * pi * (static_cast<long double>(k) + 0.354L) / static_cast<long double>(deg);
        z[k] = radius * std::complex<long double>(std::cos(ang), std::sin(ang)) +
               std::complex<long double>(0.0L, 1e-3L);
    }
    const long double tol = 1e-14L;
    long double worst = 1.0L;
    for (int iter = 0; iter < 400; ++iter) {
        worst = 0.0L;
        for (std::size_t k = 0; k < deg; ++k) {
            std::complex<long double> p, dp;
            eval(z[k], p, dp);
            if (p == std::complex<long double>(0.0L, 0.0L)) continue;
            if (dp == std::complex<long double>(0.0L, 0.0L)) {
                z[k] += std::complex<long double>(1e-8L, 1e-8L);
                worst = 1.0L;
                continue;
            }
            std::complex<long double> w = p / dp;
            std::complex<long double> sigma = 0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) sigma += std::complex<long double>(1.0L, 0.0L) / (z[k] - z[j]);
            std::complex<long double> denom = std::complex<long double>(1.0L, 0.0L) - w * sigma;
            std::complex<long double> delta = denom == std::complex<long double>(0.0L, 0.0L) ? w : w / denom;
            z[k] -= delta;
            worst = std::max(worst, std::abs(delta) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < tol) break;
    }
    if (worst > 1e-9L) throw convergence_error("aberth_roots: root iteration did not converge");
    // Newton polish
    for (std::size_t k = 0; k < deg; ++k) {
        for (int step = 0; step < 3; ++step) {
            std::complex<long double> p, dp;
            eval(z[k], p, dp);
            if (dp == std::complex<long double>(0.0L, 0.0L)) break;
            std::complex<long double> delta = p / dp;
            if (std::abs(delta) > 0.5L) break; // polish only, never wander
            z[k] -= delta;
        }
    }
    return z;
}

/// Deterministic pairwise sum.
inline double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline double quadrature_mean(const LaurentPoly& f, std::size_t n, double offset) {
    const std::size_t d = f.vars();
    struct Term {
        double coeff;
        std::vector<std::int64_t> exps;
    };
    std::vector<Term> terms;
    for (const auto& [e, c] : f.terms()) terms.push_back({c.get_d(), e});
    // per term, per axis table of exp(2 pi i (j+offset) e / n)
    std::vector<std::vector<std::vector<std::complex<double>>>> table(terms.size());
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        table[t].resize(d);
        for (std::size_t k = 0; k < d; ++k) {
            table[t][k].resize(n);
            const double base = two_pi * static_cast<double>(terms[t].exps[k]) / static_cast<double>(n);
            for (std::size_t j = 0; j < n; ++j) {
                double ang = base * (static_cast<double>(j) + offset);
                table[t][k][j] = {std::cos(ang), std::sin(ang)};
            }
        }
    }
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= n;
    std::vector<double> logs(total);
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t point = 0; point < total; ++point) {
        std::complex<double> sum(0.0, 0.0);
        for (std::size_t t = 0; t < terms.size(); ++t) {
            std::complex<double> prod(terms[t].coeff, 0.0);
            for (std::size_t k = 0; k < d; ++k) prod *= table[t][k][idx[k]];
            sum += prod;
        }
        double a = std::abs(sum);
        if (a < 1e-280) throw convergence_error("quadrature: sample hit a zero of f");
        logs[point] = std::log(a);
        for (std::size_t k = d; k-- > 0;) {
            if (++idx[k] < n) break;
            idx[k] = 0;
        }
    }
    return pairwise_sum(logs, 0, logs.size()) / static_cast<double>(total);
}

} // namespace detail

/// Mahler measure by Jensen's formula: strip integer content and small
/// cyclotomic factors exactly, then M = content * |lead| * prod max(1,|root|)
/// over the roots of what is left.
inline MahlerResult mahler_univariate(const LaurentPoly& f) {
    if (f.vars() != 1) throw std::invalid_argument("mahler_univariate: univariate polynomial required");
    if (f.is_zero()) throw std::invalid_argument("mahler_univariate: zero polynomial");
    LaurentPoly g = canonical_unit_form(f);
    Int content = 0;
    for (const auto& [e, c] : g.terms()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1) g = exact_divide(g, LaurentPoly::constant(1, content));

    std::map<std::uint64_t, LaurentPoly> memo;
    std::int64_t deg = g.terms().rbegin()->first[0];
    for (std::uint64_t n = 1; n <= 512 && deg > 0; ++n) {
        if (detail::euler_phi(n) > static_cast<std::uint64_t>(deg)) continue;
        LaurentPoly phi = detail::cyclotomic(n, memo);
        while (deg > 0) {
            std::optional<LaurentPoly> q = try_exact_divide(g, phi);
            if (!q) break;
            g = *std::move(q);
            deg = g.terms().rbegin()->first[0];
        }
    }

    MahlerResult r;
    r.method = MahlerMethod::jensen_roots;
    long double log_m = static_cast<long double>(log_int(content == 0 ? Int(1) : content));
    if (deg > 0) {
        std::vector<Int> coeffs(static_cast<std::size_t>(deg) + 1);
        for (const auto& [e, c] : g.terms()) coeffs[static_cast<std::size_t>(e[0])] = c;
        std::vector<std::complex<long double>> roots = detail::aberth_roots(coeffs);
        Int lead = abs(coeffs.back());
        log_m += static_cast<long double>(log_int(lead));
        for (const std::complex<long double>& z : roots) {
            long double a = std::abs(z);
            if (a > 1.0L) log_m += std::log(a);
            r.roots.push_back({static_cast<double>(z.real()), static_cast<double>(z.imag())});
        }
        r.error_estimate = static_cast<double>(deg) * 1e-11 * std::exp(static_cast<double>(log_m));
    } else {
        // content times a cyclotomic product: measure is exactly the content
        Int lead = abs(g.terms().rbegin()->second);
        log_m += static_cast<long double>(log_int(lead == 0 ? Int(1) : lead));
        r.error_estimate = 0.0;
    }
    r.log_measure = static_cast<double>(log_m);
    r.measure = std::exp(r.log_measure);
    return r;
}

/// Mahler measure by torus quadrature on a half-step-offset N^d grid,
/// compared against the 2N^d grid; the returned value is the finer one and
/// the error estimate is the difference. The log singularities are integrable
/// and the offset keeps lattice zeros such as f(1,...,1)=0 off the grid.
inline MahlerResult mahler_multivariate(const LaurentPoly& f, std::size_t grid) {
    if (f.vars() < 2) throw std::invalid_argument("mahler_multivariate: at least two variables required");
    if (f.is_zero()) throw std::invalid_argument("mahler_multivariate: zero polynomial");
    if (grid < 2) throw std::invalid_argument("mahler_multivariate: grid too small");
    const double offsets[] = {0.5, 0.3719, 0.28657};
    for (double off : offsets) {
        try {
            double coarse = detail::quadrature_mean(f, grid, off);
            double fine = detail::quadrature_mean(f, 2 * grid, off);
            MahlerResult r;
            r.method = MahlerMethod::torus_quadrature;
            r.log_measure = fine;
            r.measure = std::exp(fine);
            r.error_estimate = std::abs(fine - coarse);
            r.grid_sizes = {grid, 2 * grid};
            return r;
        } catch (const convergence_error&) {
            continue; // zero hit: resample with a fresh offset
        }
    }
    throw convergence_error("mahler_multivariate: grid kept sampling zeros of f");
}

struct GrowthReport {
    std::vector<std::uint64_t> quotient_index; // |Z^d / Lambda|; equals r when d=1
    std::vector<Int> kappa;
    std::vector<double> normalized_log; // log(kappa) / index
    double target_log_mahler = 0.0;
    std::vector<double> residuals; // normalized_log - target
};

/// kappa_{G_Lambda} for a list of sublattices, against log M(Delta_G).
inline GrowthReport complexity_growth_sequence(const PeriodicGraph& g, const std::vector<Sublattice>& lattices) {
    LaurentPoly delta = laplacian_polynomial(g);
    if (delta.is_zero())
        throw std::invalid_argument("complexity_growth_sequence: Laplacian polynomial is identically zero");
    GrowthReport rep;
    rep.target_log_mahler = g.dims == 1 ? mahler_univariate(delta).log_measure
                                        : mahler_multivariate(delta, 256).log_measure;
    for (const Sublattice& lat : lattices) {
        SignedGraph q = quotient_graph(g, lat);
        Int k = torsion_complexity(laplacian_matrix(q));
        Int index = lat.index();
        rep.quotient_index.push_back(mpz_get_ui(index.get_mpz_t()));
        rep.kappa.push_back(k);
        rep.normalized_log.push_back(log_int(k) / index.get_d());
        rep.residuals.push_back(rep.normalized_log.back() - rep.target_log_mahler);
    }
    return rep;
}

/// d=1 convenience: r = 1..r_max.
inline GrowthReport complexity_growth_sequence(const PeriodicGraph& g, std::uint64_t r_max) {
    if (g.dims != 1) throw std::invalid_argument("complexity_growth_sequence: graph is not 1-periodic");
    std::vector<Sublattice> lats;
    for (std::uint64_t r = 1; r <= r_max; ++r) lats.push_back(Sublattice::cyclic(r));
    return complexity_growth_sequence(g, lats);
}

struct GapRow {
    std::uint64_t s = 0;
    double log_measure = 0.0;
    double margin = 0.0; // log M - log 2
};

/// Complexity growth rate gap experiment: Delta = 4 - x - x^{-1} - x^s - x^{-s}
/// must have log M >= log 2, with equality at s=1.
inline std::vector<GapRow> growth_rate_gap_check(std::uint64_t s_max) {
    std::vector<GapRow> rows;
    for (std::uint64_t s = 1; s <= s_max; ++s) {
        LaurentPoly f(1);
        f.add_term({0}, 4);
        f.add_term({1}, -1);
        f.add_term({-1}, -1);
        f.add_term({static_cast<std::int64_t>(s)}, -1);
        f.add_term({-static_cast<std::int64_t>(s)}, -1);
        MahlerResult m = mahler_univariate(f);
        rows.push_back({s, m.log_measure, m.log_measure - std::log(2.0)});
    }
    return rows;
}

struct LehmerCandidate {
    PeriodicGraph graph;
    LaurentPoly delta_canonical;
    double measure = 0.0;
};

/// Exhaustive search over single-orbit 1-periodic signed graphs with at most
/// max_edges loops of winding 1..max_shift. Returns candidates with M > 1,
/// deduplicated by canonical Laplacian polynomial, ascending in M.
inline std::vector<LehmerCandidate> lehmer_search(std::int64_t max_shift, std::size_t max_edges) {
    if (max_shift < 1 || max_edges == 0 || max_edges > 8 || max_shift > 16)
        throw std::invalid_argument("lehmer_search: bounds out of range");
    std::vector<std::pair<std::int64_t, int>> types; // (shift, sign)
    for (std::int64_t s = 1; s <= max_shift; ++s) {
        types.push_back({s, 1});
        types.push_back({s, -1});
    }
    std::map<std::string, LehmerCandidate> seen;
    std::vector<std::pair<std::int64_t, int>> current;
    auto consider = [&]() {
        PeriodicGraph g;
        g.dims = 1;
        g.orbit_count = 1;
        for (auto [s, sg] : current) g.edges.push_back({0, 0, {s}, sg});
        LaurentPoly delta = laplacian_polynomial(g);
        if (delta.is_zero()) return;
        LaurentPoly canon = canonical_unit_form(delta);
        std::string key = to_string(canon);
        if (seen.count(key)) return;
        MahlerResult m = mahler_univariate(canon);
        if (m.measure <= 1.0 + 1e-8) return;
        seen.emplace(std::move(key), LehmerCandidate{std::move(g), std::move(canon), m.measure});
    };
    auto rec = [&](auto&& self, std::size_t type_idx) -> void {
        if (!current.empty()) consider();
        if (current.size() == max_edges || type_idx == types.size()) return;
        for (std::size_t t = type_idx; t < types.size(); ++t) {
            current.push_back(types[t]);
            self(self, t); // multisets: same type may repeat
            current.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<LehmerCandidate> out;
    for (auto& [key, cand] : seen) out.push_back(std::move(cand));
    std::sort(out.begin(), out.end(), [](const LehmerCandidate& a, const LehmerCandidate& b) {
        return a.measure < b.measure;
    });
    return out;
}

} // namespace siglap
