#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "siglap/annular.hpp"
#include "siglap/errors.hpp"
#include "siglap/laurent.hpp"
#include "siglap/periodic.hpp"
#include "siglap/plane_graph.hpp"
#include "siglap/signed_graph.hpp"

namespace siglap {

/// FNV-1a 64-bit digest, printed as 16 hex digits. Identifies inputs in
/// result records.
inline std::string fnv1a_digest(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

/// Parsed graph file: d = 0 is a finite signed graph, d >= 1 a periodic one.
/// Optional rotation system (darts "<edge>a" / "<edge>b") and outer dart.
struct GraphFile {
    std::size_t d = 0;
    std::size_t vertex_count = 0;
    std::vector<PeriodicEdge> edges; // shift has length d (empty when d = 0)
    std::vector<std::vector<Dart>> rotations;
    bool has_rotations = false;
    std::optional<Dart> outer;
    std::map<std::size_t, std::string> labels;

    SignedGraph to_signed_graph() const {
        if (d != 0) throw std::invalid_argument("graph file: finite graph (d 0) required");
        SignedGraph g;
        g.vertex_count = vertex_count;
        for (const PeriodicEdge& e : edges) g.edges.push_back({e.from, e.to, e.sign});
        g.validate();
        return g;
    }

    PeriodicGraph to_periodic_graph() const {
        if (d == 0) throw std::invalid_argument("graph file: periodic graph (d >= 1) required");
        PeriodicGraph g;
        g.dims = d;
        g.orbit_count = vertex_count;
        g.edges = edges;
        g.validate();
        return g;
    }

    PlaneGraph to_plane_graph() const {
        if (!has_rotations) throw std::invalid_argument("graph file: rotation system required");
        PlaneGraph pg;
        pg.graph = to_signed_graph();
        pg.rotations = rotations;
        pg.outer_dart = outer.value_or(0);
        validate_plane(pg);
        return pg;
    }

    AnnularGraph to_annular_graph() const {
        if (!has_rotations) throw std::invalid_argument("graph file: rotation system required");
        AnnularGraph ag;
        ag.graph = to_periodic_graph();
        ag.rotations = rotations;
        validate_annular(ag);
        return ag;
    }
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::string clean = line.substr(0, line.find('#'));
    std::istringstream is(clean);
    std::vector<std::string> tok;
    std::string t;
    while (is >> t) tok.push_back(t);
    return tok;
}

inline std::int64_t parse_int(const std::string& s, std::size_t lineno, const char* what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error(std::string("expected an integer for ") + what + ", got '" + s + "'", lineno);
    }
}

inline Dart parse_dart(const std::string& s, std::size_t edge_count, std::size_t lineno) {
    if (s.size() < 2 || (s.back() != 'a' && s.back() != 'b'))
        throw parse_error("dart must look like '<edge>a' or '<edge>b', got '" + s + "'", lineno);
    std::int64_t e = parse_int(s.substr(0, s.size() - 1), lineno, "dart edge index");
    if (e < 0 || static_cast<std::size_t>(e) >= edge_count)
        throw parse_error("dart edge index out of range in '" + s + "'", lineno);
    return static_cast<Dart>(2 * e + (s.back() == 'b' ? 1 : 0));
}

} // namespace detail

inline GraphFile parse_graph_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    GraphFile gf;
    bool saw_header = false, saw_d = false, saw_vertices = false;
    std::vector<std::pair<std::vector<std::string>, std::size_t>> rotation_lines;
    std::optional<std::pair<std::string, std::size_t>> outer_line;
    while (std::getline(is, line)) {
        ++lineno;
        std::vector<std::string> tok = detail::tokenize(line);
        if (tok.empty()) continue;
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "siglap-graph" || tok[1] != "1")
                throw parse_error("expected header 'siglap-graph 1'", lineno);
            saw_header = true;
            continue;
        }
        const std::string& key = tok[0];
        if (key == "d") {
            if (tok.size() != 2) throw parse_error("usage: d <dimension>", lineno);
            std::int64_t v = detail::parse_int(tok[1], lineno, "d");
            if (v < 0) throw parse_error("d must be nonnegative", lineno);
            gf.d = static_cast<std::size_t>(v);
            saw_d = true;
        } else if (key == "vertices") {
            if (tok.size() != 2) throw parse_error("usage: vertices <count>", lineno);
            std::int64_t v = detail::parse_int(tok[1], lineno, "vertices");
            if (v < 0) throw parse_error("vertex count must be nonnegative", lineno);
            gf.vertex_count = static_cast<std::size_t>(v);
            saw_vertices = true;
        } else if (key == "edge") {
            if (!saw_d || !saw_vertices) throw parse_error("'edge' before 'd'/'vertices'", lineno);
            if (tok.size() != 4 + gf.d)
                throw parse_error("usage: edge <from> <to> <shift...(" + std::to_string(gf.d) + ")> <sign>", lineno);
            PeriodicEdge e;
            std::int64_t a = detail::parse_int(tok[1], lineno, "edge endpoint");
            std::int64_t b = detail::parse_int(tok[2], lineno, "edge endpoint");
            if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= gf.vertex_count ||
                static_cast<std::size_t>(b) >= gf.vertex_count)
                throw parse_error("edge endpoint out of range", lineno);
            e.from = static_cast<std::size_t>(a);
            e.to = static_cast<std::size_t>(b);
            for (std::size_t k = 0; k < gf.d; ++k)
                e.shift.push_back(detail::parse_int(tok[3 + k], lineno, "edge shift"));
            std::int64_t sgn = detail::parse_int(tok[3 + gf.d], lineno, "edge sign");
            if (sgn != 1 && sgn != -1) throw parse_error("edge sign must be +1 or -1", lineno);
            e.sign = static_cast<int>(sgn);
            gf.edges.push_back(std::move(e));
        } else if (key == "rotation") {
            if (tok.size() < 2) throw parse_error("usage: rotation <vertex> <dart...>", lineno);
            rotation_lines.push_back({tok, lineno});
        } else if (key == "outer") {
            if (tok.size() != 2) throw parse_error("usage: outer <dart>", lineno);
            outer_line = {tok[1], lineno};
        } else if (key == "label") {
            if (tok.size() < 3) throw parse_error("usage: label <vertex> <text>", lineno);
            std::int64_t v = detail::parse_int(tok[1], lineno, "label vertex");
            if (v < 0 || static_cast<std::size_t>(v) >= gf.vertex_count)
                throw parse_error("label vertex out of range", lineno);
            std::string text = tok[2];
            for (std::size_t k = 3; k < tok.size(); ++k) text += " " + tok[k];
            gf.labels[static_cast<std::size_t>(v)] = text;
        } else {
            throw parse_error("unknown directive '" + key + "'", lineno);
        }
    }
    if (!saw_header) throw parse_error("empty file: expected header 'siglap-graph 1'", lineno + 1);
    if (!saw_d || !saw_vertices) throw parse_error("missing 'd' or 'vertices' directive", lineno + 1);
    if (!rotation_lines.empty()) {
        gf.has_rotations = true;
        gf.rotations.assign(gf.vertex_count, {});
        for (const auto& [tok, ln] : rotation_lines) {
            std::int64_t v = detail::parse_int(tok[1], ln, "rotation vertex");
            if (v < 0 || static_cast<std::size_t>(v) >= gf.vertex_count)
                throw parse_error("rotation vertex out of range", ln);
            if (!gf.rotations[static_cast<std::size_t>(v)].empty())
                throw parse_error("duplicate rotation line for vertex " + tok[1], ln);
            for (std::size_t k = 2; k < tok.size(); ++k)
                gf.rotations[static_cast<std::size_t>(v)].push_back(
                    detail::parse_dart(tok[k], gf.edges.size(), ln));
        }
    }
    if (outer_line) gf.outer = detail::parse_dart(outer_line->first, gf.edges.size(), outer_line->second);
    return gf;
}

inline std::string write_graph_file(const GraphFile& gf) {
    std::ostringstream os;
    os << "siglap-graph 1\n";
    os << "d " << gf.d << "\n";
    os << "vertices " << gf.vertex_count << "\n";
    for (const PeriodicEdge& e : gf.edges) {
        os << "edge " << e.from << " " << e.to;
        for (std::int64_t s : e.shift) os << " " << s;
        os << " " << (e.sign > 0 ? "+1" : "-1") << "\n";
    }
    if (gf.has_rotations) {
        for (std::size_t v = 0; v < gf.rotations.size(); ++v) {
            os << "rotation " << v;
            for (Dart d : gf.rotations[v]) os << " " << (d >> 1) << ((d & 1u) ? 'b' : 'a');
            os << "\n";
        }
    }
    if (gf.outer) os << "outer " << (*gf.outer >> 1) << ((*gf.outer & 1u) ? 'b' : 'a') << "\n";
    for (const auto& [v, text] : gf.labels) os << "label " << v << " " << text << "\n";
    return os.str();
}

inline GraphFile graph_file_from(const PeriodicGraph& g) {
    GraphFile gf;
    gf.d = g.dims;
    gf.vertex_count = g.orbit_count;
    gf.edges = g.edges;
    return gf;
}

inline GraphFile graph_file_from(const SignedGraph& g) {
    GraphFile gf;
    gf.d = 0;
    gf.vertex_count = g.vertex_count;
    for (const SignedEdge& e : g.edges) gf.edges.push_back({e.a, e.b, {}, e.sign});
    return gf;
}

inline GraphFile graph_file_from(const PlaneGraph& g) {
    GraphFile gf = graph_file_from(g.graph);
    gf.has_rotations = true;
    gf.rotations = g.rotations;
    gf.outer = g.outer_dart;
    return gf;
}

inline GraphFile graph_file_from(const AnnularGraph& g) {
    GraphFile gf = graph_file_from(g.graph);
    gf.has_rotations = true;
    gf.rotations = g.rotations;
    return gf;
}

/// Polynomial file: header 'siglap-poly 1', a 'd' line, then one
/// 'term <e_1> ... <e_d> <coeff>' line per term.
inline LaurentPoly parse_poly_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false, saw_d = false;
    std::size_t d = 0;
    LaurentPoly f(0);
    while (std::getline(is, line)) {
        ++lineno;
        std::vector<std::string> tok = detail::tokenize(line);
        if (tok.empty()) continue;
        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "siglap-poly" || tok[1] != "1")
                throw parse_error("expected header 'siglap-poly 1'", lineno);
            saw_header = true;
            continue;
        }
        if (tok[0] == "d") {
            if (tok.size() != 2) throw parse_error("usage: d <dimension>", lineno);
            std::int64_t v = detail::parse_int(tok[1], lineno, "d");
            if (v < 1) throw parse_error("d must be >= 1 for a polynomial file", lineno);
            d = static_cast<std::size_t>(v);
            f = LaurentPoly(d);
            saw_d = true;
        } else if (tok[0] == "term") {
            if (!saw_d) throw parse_error("'term' before 'd'", lineno);
            if (tok.size() != 2 + d) throw parse_error("usage: term <exponents...> <coefficient>", lineno);
            Exponent e;
            for (std::size_t k = 0; k < d; ++k) e.push_back(detail::parse_int(tok[1 + k], lineno, "exponent"));
            try {
                f.add_term(e, Int(tok[1 + d]));
            } catch (const std::invalid_argument&) {
                throw parse_error("expected an integer coefficient, got '" + tok[1 + d] + "'", lineno);
            }
        } else {
            throw parse_error("unknown directive '" + tok[0] + "'", lineno);
        }
    }
    if (!saw_header || !saw_d) throw parse_error("missing 'siglap-poly 1' header or 'd' line", lineno + 1);
    return f;
}

inline std::string write_poly_file(const LaurentPoly& f) {
    std::ostringstream os;
    os << "siglap-poly 1\n";
    os << "d " << f.vars() << "\n";
    for (const auto& [e, c] : f.terms()) {
        os << "term";
        for (std::int64_t v : e) os << " " << v;
        os << " " << c.get_str() << "\n";
    }
    return os.str();
}

/// Self-describing output record: ordered key/value lines, keys may repeat.
struct ResultRecord {
    std::string command;
    std::string input_digest;
    std::vector<std::pair<std::string, std::string>> fields;
    double wall_time_ms = 0.0;

    void add(std::string key, std::string value) { fields.push_back({std::move(key), std::move(value)}); }

    void add(std::string key, const Int& value) { add(std::move(key), value.get_str()); }

    void add_poly(const std::string& key, const LaurentPoly& f) {
        if (f.is_zero()) {
            add(key, "0 (zero polynomial)");
            return;
        }
        for (const auto& [e, c] : f.terms()) {
            std::ostringstream os;
            for (std::int64_t v : e) os << v << " ";
            os << c.get_str();
            add(key + "-term", os.str());
        }
    }

    void print(std::ostream& os) const {
        os << "record " << command << "\n";
        os << "input-digest " << input_digest << "\n";
        for (const auto& [k, v] : fields) os << k << " " << v << "\n";
        os << "wall-time-ms " << wall_time_ms << "\n";
    }
};

} // namespace siglap
