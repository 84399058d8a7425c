#pragma once

// JSON and text renderings: characters, cosets, Laurent matrices,
// presentations, wiring diagrams, certificates and reports.

#include "charvar/varieties.hpp"

#include <fstream>
#include <sstream>

namespace charvar {

using nlohmann::json;

inline json rational_json(const Rational& r) {
    if (denom(r) == 1) {
        Integer v = numer(r);
        if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) return to_long(v);
    }
    return to_string(r);
}

inline json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) return to_long(v);
    return v.str();
}

inline Integer json_integer(const json& v) {
    Rational r = json_rational(v);
    if (denom(r) != 1) throw InputError("expected an integer, got " + v.dump());
    return numer(r);
}

inline json character_json(const Character& q) {
    json a = json::array();
    for (const auto& x : q) a.push_back(to_string(mod1(x)));
    return a;
}

/// Accepts ["0","1/2",...], numbers, or a "0,1/2,..." string.
inline Character character_from_json(const json& j) {
    if (j.is_string()) return parse_character(j.get<std::string>());
    if (!j.is_array()) throw InputError("character must be an array or a comma separated string");
    Character q;
    for (const auto& x : j) q.push_back(json_rational(x));
    return normalize_character(q);
}

inline json integer_matrix_json(const IntegerMatrix& m) {
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(integer_json(x));
        a.push_back(r);
    }
    return a;
}

inline IntegerMatrix integer_matrix_from_json(const json& j) {
    if (!j.is_array()) throw InputError("expected a matrix (array of rows)");
    IntegerMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError("matrix rows must be arrays");
        IntegerVector r;
        for (const auto& x : row) r.push_back(json_integer(x));
        m.push_back(std::move(r));
    }
    return m;
}

inline json coset_json(const TorusCoset& K) {
    return {{"dim", K.dim()},
            {"translate", character_json(K.translate())},
            {"lattice", integer_matrix_json(K.lattice())},
            {"exponents", integer_matrix_json(K.exponents())},
            {"parametrization", K.parametrization_string()},
            {"contains_identity", K.contains_identity()},
            {"essential", K.essential()}};
}

/// {"translate": [...], "lattice": [[...]]} or {"translate": [...], "exponents": [[...]]}.
inline TorusCoset coset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("translate")) throw InputError("coset needs a \"translate\" entry");
    Character t = character_from_json(j.at("translate"));
    const std::size_t n = t.size();
    if (j.contains("lattice")) {
        auto L = integer_matrix_from_json(j.at("lattice"));
        return TorusCoset::from_lattice(n, L, t);
    }
    if (j.contains("exponents")) {
        auto B = integer_matrix_from_json(j.at("exponents"));
        if (B.size() != n) throw InputError("exponents need one row per coordinate");
        std::size_t k = B.empty() ? 0 : B[0].size();
        for (const auto& row : B)
            if (row.size() != k) throw InputError("exponent rows have different lengths");
        return TorusCoset::from_parametrization(n, B, t);
    }
    return TorusCoset::point(t);
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline Arrangement read_arrangement(const std::string& path) {
    try {
        return arrangement_from_json(read_json_file(path));
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------- matrices

/// Coefficient as {"den": d, "num": [c_0, ...]} in powers of zeta_N.
inline json coefficient_json(const Rational& c) { return {{"den", integer_json(denom(c))}, {"num", {integer_json(numer(c))}}}; }

inline json coefficient_json(const Cyclo& c) {
    Integer den = common_denominator(c.coefficients());
    json num = json::array();
    for (const auto& x : c.coefficients()) num.push_back(integer_json(numer(x * Rational(den))));
    return {{"den", integer_json(den)}, {"num", num}};
}

inline long matrix_conductor(const IntLaurentMatrix&) { return 1; }
inline long matrix_conductor(const CycloLaurentMatrix& m) {
    long n = 1;
    for (const auto& row : m.entries)
        for (const auto& e : row)
            for (const auto& [x, c] : e.terms()) n = lcm_long(n, c.conductor());
    return n;
}

/// Inverse of the term list format: [{"exp": [...], "coef": c}, ...] with c
/// an integer, a "p/q" string or {"den": d, "num": [c]}.
inline IntLaurent int_laurent_from_json(const json& terms, std::size_t nvars) {
    if (!terms.is_array()) throw InputError("polynomial must be a list of terms");
    IntLaurent p(nvars);
    for (const auto& t : terms) {
        Exponent e = t.at("exp").get<Exponent>();
        if (e.size() != nvars) throw InputError("exponent length mismatch in polynomial term");
        const auto& c = t.at("coef");
        Rational v;
        if (c.is_object()) {
            const auto& num = c.at("num");
            if (num.size() != 1) throw InputError("rational coefficient expected");
            v = Rational(json_integer(num.at(0))) / Rational(json_integer(c.at("den")));
        } else {
            v = json_rational(c);
        }
        p.add_term(e, v);
    }
    return p;
}

template <class R>
json laurent_matrix_json(const LaurentMatrix<R>& m) {
    const long N = matrix_conductor(m);
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const auto& e : row) {
            json terms = json::array();
            for (const auto& [x, c] : e.terms()) {
                R coef = c;
                if constexpr (std::is_same_v<R, Cyclo>) coef = c.embed(N);
                terms.push_back({{"exp", x}, {"coef", coefficient_json(coef)}});
            }
            r.push_back(terms);
        }
        rows.push_back(r);
    }
    return {{"rows", m.rows}, {"cols", m.cols}, {"variables", m.variables}, {"context", {{"N", N}}}, {"entries", rows}};
}

template <class R>
std::string laurent_matrix_text(const LaurentMatrix<R>& m) {
    std::ostringstream os;
    os << m.rows << " x " << m.cols << " over variables";
    for (const auto& v : m.variables) os << " " << v;
    os << "\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        os << "row " << i + 1 << ":";
        for (std::size_t j = 0; j < m.cols; ++j) os << (j ? " | " : " ") << m.entries[i][j].str(m.variables);
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- presentations

inline std::string presentation_text(const GroupPresentation& P) {
    auto names = P.names();
    std::ostringstream os;
    os << (P.kind == PresentationKind::Fibered ? "fibered" : "braid monodromy") << " presentation, " << P.rank()
       << " generators, " << P.relators.size() << " relators\n";
    os << "generators:";
    for (std::size_t g = 0; g < P.rank(); ++g) os << " " << names[g] << "=" << P.generators[g].label;
    os << "\n";
    if (P.kind == PresentationKind::Fibered)
        for (std::size_t j = 0; j < P.fiber_monodromy.size(); ++j)
            os << "monodromy y" << j + 1 << ": " << P.fiber_monodromy[j].str() << "\n";
    for (std::size_t r = 0; r < P.relators.size(); ++r) os << "r" << r + 1 << " = " << P.relators[r].str(names) << "\n";
    return os.str();
}

inline json presentation_json(const GroupPresentation& P) {
    auto names = P.names();
    json gens = json::array();
    for (std::size_t g = 0; g < P.rank(); ++g)
        gens.push_back({{"name", names[g]}, {"label", P.generators[g].label}, {"hyperplane", P.generators[g].hyperplane + 1},
                        {"fiber", P.generators[g].fiber}});
    json rels = json::array();
    for (const auto& r : P.relators) rels.push_back({{"letters", r.letters()}, {"word", r.str(names)}});
    json j = {{"kind", P.kind == PresentationKind::Fibered ? "fibered" : "braid_monodromy"},
              {"generators", gens},
              {"relators", rels}};
    if (P.kind == PresentationKind::Fibered) {
        json mono = json::array();
        for (const auto& b : P.fiber_monodromy) mono.push_back(b.str());
        j["wires"] = P.wires;
        j["fiber_monodromy"] = mono;
    }
    return j;
}

// ---------------------------------------------------------------- wiring

inline json wiring_json(const Arrangement& arr, const WiringDiagram& wd) {
    json wires = json::array();
    for (int l : wd.line_of_wire) wires.push_back(arr.labels[static_cast<std::size_t>(l)]);
    json verts = json::array();
    for (std::size_t k = 0; k < wd.vertices.size(); ++k) {
        const auto& v = wd.vertices[k];
        json ws = json::array(), J = json::array();
        for (int w : v.wires) ws.push_back(w + 1);
        for (int w : v.J) J.push_back(w + 1);
        json vert = {{"wires", ws}, {"J", J}, {"p", rational_json(v.p)}, {"q", rational_json(v.q)}};
        if (!wd.fiber_of_vertex.empty()) vert["fiber"] = wd.fiber_of_vertex[k] + 1;
        verts.push_back(vert);
    }
    json dir = json::array();
    for (const auto& x : wd.direction) dir.push_back(rational_json(x));
    json j = {{"direction", dir}, {"wires", wires}, {"vertices", verts}};
    if (!wd.fiber_lines.empty()) {
        json f = json::array();
        for (int l : wd.fiber_lines) f.push_back(arr.labels[static_cast<std::size_t>(l)]);
        j["fibers"] = f;
    }
    return j;
}

inline std::string wiring_text(const Arrangement& arr, const WiringDiagram& wd) {
    std::ostringstream os;
    os << "direction (" << to_string(wd.direction.at(0)) << ", " << to_string(wd.direction.at(1)) << ")\n";
    os << "wires bottom to top:";
    for (int l : wd.line_of_wire) os << " " << arr.labels[static_cast<std::size_t>(l)];
    os << "\n";
    if (!wd.fiber_lines.empty()) {
        os << "fibers:";
        for (int l : wd.fiber_lines) os << " " << arr.labels[static_cast<std::size_t>(l)];
        os << "\n";
    }
    for (std::size_t k = 0; k < wd.vertices.size(); ++k) {
        const auto& v = wd.vertices[k];
        os << "vertex " << k + 1 << ": wires " << format_set(v.wires) << " J " << format_set(v.J) << " at p = " << to_string(v.p);
        if (!wd.fiber_of_vertex.empty()) os << " fiber " << wd.fiber_of_vertex[k] + 1;
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- results

inline json certificate_json(const Certificate& c) {
    return {{"certified", c.certified}, {"rank", c.rank},         {"bound", c.bound},         {"generic_depth", c.generic_depth},
            {"oracle_rank", c.oracle_rank}, {"parametrization", c.parametrization}, {"reason", c.reason}};
}

inline json resonance_component_json(const ResonanceComponent& c) {
    json blocks = json::array();
    for (const auto& b : c.blocks) {
        json x = json::array();
        for (int i : b) x.push_back(i + 1);
        blocks.push_back(x);
    }
    json basis = json::array();
    for (const auto& row : c.basis) {
        json r = json::array();
        for (const auto& x : row) r.push_back(rational_json(x));
        basis.push_back(r);
    }
    json support = json::array();
    for (int i : c.support) support.push_back(i + 1);
    return {{"name", c.name()},
            {"kind", c.kind == ComponentKind::Local ? "local" : "partition"},
            {"support", support},
            {"blocks", blocks},
            {"dim", c.dim()},
            {"basis", basis}};
}

inline json report_json(const PosetReport& r) {
    json nodes = json::array();
    for (const auto& n : r.nodes)
        nodes.push_back({{"id", n.id},
                         {"dim", n.coset.dim()},
                         {"depth", n.depth},
                         {"essential", n.essential},
                         {"provenance", n.provenance},
                         {"coset", coset_json(n.coset)}});
    json edges = json::array();
    for (const auto& e : r.edges) edges.push_back({{"members", e.members}, {"point", character_json(e.point)}, {"depth", e.depth}});
    json totals = json::object();
    for (const auto& [k, v] : r.totals) totals[k] = v;
    return {{"nodes", nodes}, {"edges", edges}, {"totals", totals}};
}

inline std::string report_text(const PosetReport& r) {
    std::ostringstream os;
    os << "components (" << r.nodes.size() << "):\n";
    for (const auto& n : r.nodes)
        os << "  " << n.id << "  dim " << n.coset.dim() << "  depth " << n.depth << (n.essential ? "  essential" : "") << "  ["
           << n.provenance << "]  " << n.coset.parametrization_string() << "\n";
    os << "intersection points (" << r.edges.size() << "):\n";
    for (const auto& e : r.edges) {
        os << "  " << format_character(e.point) << "  depth " << e.depth << "  in";
        for (const auto& m : e.members) os << " " << m;
        os << "\n";
    }
    os << "totals:";
    for (const auto& [k, v] : r.totals) os << " " << k << "=" << v;
    os << "\n";
    return os.str();
}

}  // namespace charvar
