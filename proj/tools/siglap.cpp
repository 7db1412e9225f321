// Command-line front end: complexity invariants, Laplacian polynomials,
// Mahler measures, growth experiments and link-diagram constructions for
// signed (periodic) graphs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "siglap/siglap.hpp"

namespace {

using namespace siglap;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'", 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// "1,1,0,-1" or "1 1 0 -1": coefficients c_0..c_n of an ordinary polynomial.
std::vector<Int> parse_coeff_list(std::string spec) {
    for (char& c : spec)
        if (c == ',') c = ' ';
    std::istringstream is(spec);
    std::vector<Int> out;
    std::string tok;
    while (is >> tok) {
        try {
            out.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad coefficient '" + tok + "'", 0);
        }
    }
    if (out.empty()) throw parse_error("empty coefficient list", 0);
    return out;
}

/// Center an even-degree reciprocal polynomial into palindromic Laurent form.
LaurentPoly palindromic_from_coeffs(const std::vector<Int>& c) {
    std::size_t n = c.size();
    while (n > 0 && c[n - 1] == 0) --n;
    if (n == 0) throw std::invalid_argument("zero polynomial");
    const std::size_t deg = n - 1;
    LaurentPoly f(1);
    if (deg % 2 != 0) throw std::invalid_argument("polynomial has odd degree; cannot center to palindromic form");
    for (std::size_t k = 0; k < n; ++k)
        f.add_term({static_cast<std::int64_t>(k) - static_cast<std::int64_t>(deg / 2)}, c[k]);
    if (!is_palindromic(f)) throw std::invalid_argument("polynomial is not reciprocal");
    return f;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

void run_complexity(const std::string& path) {
    Timer t;
    std::string text = read_input(path);
    GraphFile gf = parse_graph_file(text);
    SignedGraph g = gf.to_signed_graph();
    IntMatrix L = laplacian_matrix(g);
    AbelianGroupStructure coker = cokernel_structure(L);
    ResultRecord rec{"complexity", fnv1a_digest(text)};
    rec.add("vertices", std::to_string(g.vertex_count));
    rec.add("edges", std::to_string(g.edges.size()));
    rec.add("kappa", coker.torsion_order());
    rec.add("tau", tree_complexity(g));
    rec.add("rank", std::to_string(coker.rank));
    std::ostringstream fs;
    for (const Int& d : coker.invariant_factors) fs << d.get_str() << " ";
    rec.add("invariant-factors", coker.invariant_factors.empty() ? "(none)" : fs.str());
    rec.wall_time_ms = t.ms();
    rec.print(std::cout);
}

void run_poly(const std::string& path) {
    Timer t;
    std::string text = read_input(path);
    GraphFile gf = parse_graph_file(text);
    PeriodicGraph g = gf.to_periodic_graph();
    LaurentPoly delta = laplacian_polynomial(g);
    ResultRecord rec{"poly", fnv1a_digest(text)};
    rec.add("d", std::to_string(g.dims));
    rec.add_poly("delta-raw", delta);
    if (!delta.is_zero() && g.dims == 1) rec.add_poly("delta-canonical", canonical_unit_form(delta));
    rec.add("delta-pretty", to_string(delta));
    rec.wall_time_ms = t.ms();
    rec.print(std::cout);
}

void add_mahler_fields(ResultRecord& rec, const MahlerResult& m) {
    rec.add("method", m.method == MahlerMethod::jensen_roots ? "jensen-roots" : "torus-quadrature");
    std::ostringstream os;
    os.precision(15);
    os << m.log_measure;
    rec.add("log-measure", os.str());
    std::ostringstream os2;
    os2.precision(15);
    os2 << m.measure;
    rec.add("measure", os2.str());
    std::ostringstream os3;
    os3.precision(6);
    os3 << m.error_estimate;
    rec.add("error-estimate", os3.str());
    if (!m.grid_sizes.empty())
        rec.add("grid-sizes", std::to_string(m.grid_sizes[0]) + " " + std::to_string(m.grid_sizes[1]));
    if (!m.roots.empty()) rec.add("root-count", std::to_string(m.roots.size()));
}

void run_mahler(const std::string& path, const std::string& coeffs, std::size_t grid) {
    Timer t;
    LaurentPoly f(1);
    std::string digest;
    if (!coeffs.empty()) {
        std::vector<Int> c = parse_coeff_list(coeffs);
        digest = fnv1a_digest(coeffs);
        f = LaurentPoly(1);
        for (std::size_t k = 0; k < c.size(); ++k) f.add_term({static_cast<std::int64_t>(k)}, c[k]);
    } else {
        std::string text = read_input(path);
        digest = fnv1a_digest(text);
        if (text.find("siglap-poly") != std::string::npos) {
            f = parse_poly_file(text);
        } else {
            GraphFile gf = parse_graph_file(text);
            f = laplacian_polynomial(gf.to_periodic_graph());
        }
    }
    if (f.is_zero()) throw std::invalid_argument("mahler: zero polynomial");
    MahlerResult m = f.vars() == 1 ? mahler_univariate(f) : mahler_multivariate(f, grid);
    ResultRecord rec{"mahler", digest};
    rec.add_poly("input", f);
    add_mahler_fields(rec, m);
    rec.wall_time_ms = t.ms();
    rec.print(std::cout);
}

void run_growth(const std::string& path, std::uint64_t rmax, const std::string& plot_path) {
    Timer t;
    std::string text = read_input(path);
    GraphFile gf = parse_graph_file(text);
    PeriodicGraph g = gf.to_periodic_graph();
    GrowthReport rep = complexity_growth_sequence(g, rmax);
    ResultRecord rec{"growth", fnv1a_digest(text)};
    std::ostringstream os;
    os.precision(15);
    os << rep.target_log_mahler;
    rec.add("log-mahler", os.str());
    for (std::size_t i = 0; i < rep.kappa.size(); ++i) {
        std::ostringstream row;
        row.precision(10);
        row << rep.quotient_index[i] << " kappa " << rep.kappa[i].get_str() << " normalized-log "
            << rep.normalized_log[i] << " residual " << rep.residuals[i];
        rec.add("r", row.str());
    }
    rec.wall_time_ms = t.ms();
    rec.print(std::cout);
    if (!plot_path.empty()) {
        std::ofstream out(plot_path);
        if (!out) throw std::invalid_argument("cannot open plot output '" + plot_path + "'");
        out << "# r residual\n";
        out.precision(12);
        for (std::size_t i = 0; i < rep.residuals.size(); ++i)
            out << rep.quotient_index[i] << " " << rep.residuals[i] << "\n";
    }
}

void run_links(const std::string& path, std::uint64_t p, bool determinant, bool medial, bool closed) {
    Timer t;
    std::string text = read_input(path);
    GraphFile gf = parse_graph_file(text);
    ResultRecord rec{"links", fnv1a_digest(text)};
    if (gf.d == 0) {
        PlaneGraph pg = gf.to_plane_graph();
        LinkDiagram dg = medial_diagram(pg);
        detail::DiagramStructure ds = detail::analyze_diagram(dg);
        rec.add("crossings", std::to_string(dg.crossing_count));
        rec.add("arcs", std::to_string(ds.arc_count));
        rec.add("strands", std::to_string(ds.strand_count));
        if (p != 0) {
            rec.add("p", std::to_string(p));
            rec.add("fox-coloring-dimension", std::to_string(fox_coloring_dimension(dg, p)));
            rec.add("graph-coloring-dimension", std::to_string(coloring_dimension_mod_p(pg.graph, p)));
        }
        if (determinant) rec.add("link-determinant", link_determinant(pg));
        if (medial) {
            for (std::size_t c = 0; c < dg.crossing_count; ++c) {
                std::ostringstream row;
                row << c << " segments";
                for (int s = 0; s < 4; ++s) row << " " << ds.seg_at[4 * c + s];
                row << " over-pair " << dg.over_pair[c] << " sign " << (dg.sign[c] > 0 ? "+1" : "-1");
                rec.add("crossing", row.str());
            }
            for (std::size_t s = 0; s < dg.segments.size(); ++s)
                rec.add("segment-arc", std::to_string(s) + " " + std::to_string(ds.arc_of_segment[s]));
        }
    } else if (gf.d == 1) {
        AnnularGraph ag = gf.to_annular_graph();
        if (closed || p != 0 || determinant || medial) {
            ClosedComponentsReport rep = closed_components_check(ag);
            rec.add("closed-components", rep.strand_closed_component ? "yes" : "no");
            rec.add("delta-mod2-zero", rep.mod2_zero ? "yes" : "no");
            rec.add_poly("delta-mod2", rep.delta_mod2);
            rec.add("strand-orbits", std::to_string(rep.strand_orbit_count));
            if (!rep.mod2_zero) rec.add("boundary-coloring-count", boundary_coloring_count(ag.graph));
        }
    } else {
        throw std::invalid_argument("links: d must be 0 (plane graph) or 1 (annular graph)");
    }
    rec.wall_time_ms = t.ms();
    rec.print(std::cout);
}

void run_realize(const std::string& coeffs, const std::string& out_path) {
    Timer t;
    std::vector<Int> c = parse_coeff_list(coeffs);
    LaurentPoly f = palindromic_from_coeffs(c);
    PeriodicGraph g = realize_palindromic(f);
    ResultRecord rec{"realize", fnv1a_digest(coeffs)};
    rec.add_poly("f", f);
    rec.add_poly("delta", laplacian_polynomial(g));
    for (const PeriodicEdge& e : g.edges)
        rec.add("winding", std::to_string(e.shift[0]) + (e.sign > 0 ? " +1" : " -1"));
    std::string text = write_graph_file(graph_file_from(g));
    rec.wall_time_ms = t.ms();
    rec.print(std::cout);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output '" + out_path + "'");
        out << text;
    } else {
        std::cout << text;
    }
}

void run_search(std::int64_t max_shift, std::size_t max_edges) {
    Timer t;
    std::vector<LehmerCandidate> cands = lehmer_search(max_shift, max_edges);
    ResultRecord rec{"search", fnv1a_digest(std::to_string(max_shift) + "," + std::to_string(max_edges))};
    rec.add("candidates", std::to_string(cands.size()));
    for (const LehmerCandidate& c : cands) {
        std::ostringstream row;
        row.precision(12);
        row << c.measure << " delta " << to_string(c.delta_canonical) << " windings";
        for (const PeriodicEdge& e : c.graph.edges) row << " " << e.shift[0] << (e.sign > 0 ? "+" : "-");
        rec.add("candidate", row.str());
    }
    rec.wall_time_ms = t.ms();
    rec.print(std::cout);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complexity invariants of signed periodic graphs and medial links"};
    app.require_subcommand(1);

    std::string path = "-", coeffs, plot_path, out_path;
    std::uint64_t rmax = 12, p = 0;
    std::size_t grid = 512, max_edges = 4;
    std::int64_t max_shift = 6;
    bool flag_det = false, flag_medial = false, flag_closed = false;

    CLI::App* c_complexity = app.add_subcommand("complexity", "kappa, tau and Laplacian group of a finite graph");
    c_complexity->add_option("file", path, "graph file ('-' for stdin)")->required();

    CLI::App* c_poly = app.add_subcommand("poly", "Laplacian determinant polynomial of a periodic graph");
    c_poly->add_option("file", path, "graph file")->required();

    CLI::App* c_mahler = app.add_subcommand("mahler", "Mahler measure of a polynomial or graph Laplacian");
    c_mahler->add_option("file", path, "graph or polynomial file");
    c_mahler->add_option("--poly", coeffs, "inline coefficients c0,c1,...");
    c_mahler->add_option("--grid", grid, "quadrature grid size per axis (d >= 2)");

    CLI::App* c_growth = app.add_subcommand("growth", "complexity growth of finite quotients vs log Mahler");
    c_growth->add_option("file", path, "graph file (d = 1)")->required();
    c_growth->add_option("--rmax", rmax, "largest quotient index");
    c_growth->add_option("--emit-plot-data", plot_path, "write (r, residual) pairs to a file");

    CLI::App* c_links = app.add_subcommand("links", "medial diagram, colorings, determinant");
    c_links->add_option("file", path, "plane graph file (d = 0) or annular graph file (d = 1)")->required();
    c_links->add_option("--p", p, "odd prime for coloring dimensions");
    c_links->add_flag("--determinant", flag_det, "print the link determinant");
    c_links->add_flag("--medial", flag_medial, "export the medial diagram");
    c_links->add_flag("--closed-components", flag_closed, "closed-components check (d = 1)");

    CLI::App* c_realize = app.add_subcommand("realize", "1-periodic graph with prescribed Laplacian polynomial");
    c_realize->add_option("--poly", coeffs, "reciprocal integer polynomial c0,c1,...")->required();
    c_realize->add_option("-o,--output", out_path, "write the graph file here instead of stdout");

    CLI::App* c_search = app.add_subcommand("search", "small-Mahler-measure search over 1-periodic graphs");
    c_search->add_option("--max-shift", max_shift, "largest winding");
    c_search->add_option("--max-edges", max_edges, "largest number of edge orbits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_complexity->parsed()) run_complexity(path);
        else if (c_poly->parsed()) run_poly(path);
        else if (c_mahler->parsed()) run_mahler(path, coeffs, grid);
        else if (c_growth->parsed()) run_growth(path, rmax, plot_path);
        else if (c_links->parsed()) run_links(path, p, flag_det, flag_medial, flag_closed);
        else if (c_realize->parsed()) run_realize(coeffs, out_path);
        else if (c_search->parsed()) run_search(max_shift, max_edges);
    } catch (const siglap::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const siglap::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
