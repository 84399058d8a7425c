#pragma once

// Command dispatch for the charvar tool. Parsing of argv lives in
// tools/charvar.cpp; everything here works on a validated RunConfig.

#include "charvar/reproduce.hpp"

#include <iostream>

namespace charvar {

enum ExitCode : int { Ok = 0, NegativeResult = 1, UsageError = 2, BudgetError = 3 };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    long d = 1;
    long max_order = 2;
    long orders = 2;
    std::size_t blocks = 3;
    std::uint64_t prime = 0;
    int trials = 5;
    std::uint64_t seed = 1;
    std::optional<std::size_t> budget;
    std::string format = "text";
    unsigned threads = 0;
    bool fibered = false;
    bool block = false;
    std::vector<std::string> characters;  // --char, repeatable
    std::vector<std::string> cosets;      // --coset / --on, repeatable
    std::string direction;                // "a,b"
    int decone_at = 0;                    // 1-based; 0 = last
    std::string fixtures;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"poset",  "wiring",    "present",           "alexmat", "resonance", "depth",
                                            "certify", "intersect", "search-translated", "scan",    "report",    "reproduce"};
    return c;
}

/// Rejects inconsistent flags before any work starts.
inline void validate_config(const RunConfig& c) {
    if (std::find(commands().begin(), commands().end(), c.command) == commands().end())
        throw InputError("unknown command '" + c.command + "'");
    if (c.format != "text" && c.format != "json") throw InputError("--format must be text or json");
    if (c.d < 0) throw InputError("--d must be non-negative");
    if (c.max_order < 1) throw InputError("--max-order must be positive");
    if (c.orders < 1) throw InputError("--orders must be positive");
    if (c.blocks != 3) throw InputError("only 3-block neighborly partitions are supported");
    if (c.trials < 1) throw InputError("--trials must be positive");
    if (c.prime != 0 && !is_prime(c.prime)) throw InputError("--prime must be prime");
    if (c.prime != 0 && c.prime >= (std::uint64_t{1} << 62)) throw InputError("--prime must be below 2^62");
    if (c.budget && *c.budget == 0) throw InputError("--budget must be positive");
    if (c.decone_at < 0) throw InputError("--decone must be a hyperplane number");
    std::size_t need = 1;
    if (c.command == "intersect") need = 2;
    if (c.inputs.size() < need) throw InputError(c.command + " needs " + std::to_string(need) + " input(s)");
    if (c.command == "depth" && c.characters.empty()) throw InputError("depth needs --char");
    if (c.command == "certify" && c.inputs.size() < 2 && c.cosets.empty()) throw InputError("certify needs a coset file");
}

namespace detail {

inline RationalVector parse_direction(const std::string& s) {
    RationalVector v;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) v.push_back(parse_rational(part));
    if (v.size() != 2 || (v[0] == 0 && v[1] == 0)) throw InputError("--direction needs two numbers, not both zero");
    return v;
}

struct Loaded {
    Arrangement arr;
    Arrangement affine;
    std::vector<int> original;  // arrangement index of each affine line
};

inline Loaded load_affine(const RunConfig& c) {
    Loaded l;
    l.arr = read_arrangement(c.inputs.at(0));
    if (l.arr.central) {
        if (l.arr.ambient_dim != 3) throw InputError("central arrangements must live in dimension 3");
        auto d = decone(l.arr, c.decone_at - 1);
        l.affine = d.affine;
        l.original = d.original;
    } else {
        if (l.arr.ambient_dim != 2) throw InputError("affine arrangements must live in dimension 2");
        l.affine = l.arr;
        for (std::size_t k = 0; k < l.arr.size(); ++k) l.original.push_back(static_cast<int>(k));
    }
    return l;
}

inline RationalVector direction_for(const RunConfig& c, const Arrangement& affine, bool fibered) {
    if (!c.direction.empty()) return parse_direction(c.direction);
    if (fibered) {
        // a direction parallel to some line: try the lines in order
        for (const auto& f : affine.forms) {
            RationalVector dir{-f[1], f[0]};
            if (missing_fibers(affine, dir).empty()) return dir;
        }
        throw InputError("no fibered direction found among the line directions; pass --direction");
    }
    return suggest_direction(affine);
}

inline AlexanderModel model_for(const RunConfig& c, const Arrangement& arr) {
    std::optional<RationalVector> dir;
    if (!c.direction.empty()) dir = parse_direction(c.direction);
    return AlexanderModel(arr, c.decone_at - 1, dir);
}

inline AnalysisOptions analysis_options(const RunConfig& c) {
    AnalysisOptions o;
    o.d = c.d;
    o.max_order = c.max_order;
    o.seed = c.seed;
    if (c.budget) {
        o.node_budget = *c.budget;
        o.search_budget = *c.budget;
    }
    return o;
}

inline std::vector<TorusCoset> coset_files(const RunConfig& c, std::size_t first_input) {
    std::vector<TorusCoset> out;
    for (std::size_t i = first_input; i < c.inputs.size(); ++i) out.push_back(coset_from_json(read_json_file(c.inputs[i])));
    for (const auto& f : c.cosets) out.push_back(coset_from_json(read_json_file(f)));
    return out;
}

inline std::vector<Character> characters(const RunConfig& c) {
    std::vector<Character> out;
    for (const auto& s : c.characters) out.push_back(normalize_character(parse_character(s)));
    return out;
}

// ---------------------------------------------------------------- commands

inline int cmd_poset(const RunConfig& c, std::ostream& out) {
    auto arr = read_arrangement(c.inputs[0]);
    auto L = intersection_data(arr);
    if (c.format == "json") {
        json flats = json::array();
        for (const auto& f : L.flats) {
            json x = json::array();
            for (int i : f) x.push_back(i + 1);
            flats.push_back(x);
        }
        json census = json::object();
        for (const auto& [k, v] : L.census()) census[std::to_string(k)] = v;
        out << json{{"hyperplanes", L.n}, {"flats", flats}, {"census", census}}.dump(2) << "\n";
    } else {
        out << L.n << " hyperplanes, " << L.flats.size() << " rank-2 flats\n";
        for (const auto& [k, v] : L.census()) out << "  " << v << " point(s) of multiplicity " << k << "\n";
        for (const auto& f : L.multiple_points()) out << "  " << format_set(f) << "\n";
    }
    return Ok;
}

inline int cmd_wiring(const RunConfig& c, std::ostream& out) {
    auto l = load_affine(c);
    auto dir = direction_for(c, l.affine, c.fibered);
    auto wd = c.fibered ? fibered_wiring_diagram(l.affine, dir) : wiring_diagram(l.affine, dir);
    if (c.format == "json") out << wiring_json(l.affine, wd).dump(2) << "\n";
    else out << wiring_text(l.affine, wd);
    return Ok;
}

inline GroupPresentation presentation_for(const RunConfig& c, const Loaded& l) {
    auto dir = direction_for(c, l.affine, c.fibered);
    return c.fibered ? fibered_presentation(l.affine, dir) : braid_monodromy_presentation(l.affine, dir);
}

inline int cmd_present(const RunConfig& c, std::ostream& out) {
    auto l = load_affine(c);
    auto P = presentation_for(c, l);
    if (c.format == "json") out << presentation_json(P).dump(2) << "\n";
    else out << presentation_text(P);
    return Ok;
}

inline int cmd_alexmat(const RunConfig& c, std::ostream& out) {
    auto l = load_affine(c);
    RunConfig cc = c;
    if (c.block) cc.fibered = true;
    auto P = presentation_for(cc, l);
    auto A = c.block ? block_alexander(P) : alexander_matrix(P);
    if (c.format == "json") out << laurent_matrix_json(A).dump(2) << "\n";
    else out << laurent_matrix_text(A);
    return Ok;
}

inline int cmd_resonance(const RunConfig& c, std::ostream& out) {
    auto arr = read_arrangement(c.inputs[0]);
    ResonanceOptions o;
    o.seed = c.seed;
    o.block_counts = {c.blocks};
    if (c.budget) o.node_budget = *c.budget;
    auto r = resonance_components(arr, c.d, o);
    if (c.format == "json") {
        json comps = json::array();
        for (const auto& x : r.components) comps.push_back(resonance_component_json(x));
        out << json{{"d", c.d}, {"count", r.components.size()}, {"components", comps}, {"partition_nodes", r.nodes}}.dump(2)
            << "\n";
    } else {
        out << r.components.size() << " component(s) of R_" << c.d << "\n";
        for (const auto& x : r.components) out << "  " << x.name() << "  dim " << x.dim() << "\n";
    }
    return r.components.empty() ? NegativeResult : Ok;
}

inline int cmd_depth(const RunConfig& c, std::ostream& out) {
    auto arr = read_arrangement(c.inputs[0]);
    auto m = model_for(c, arr);
    json arr_j = json::array();
    for (const auto& t : characters(c)) {
        long d = m.depth(t);
        if (c.format == "json") arr_j.push_back({{"character", character_json(t)}, {"depth", d}});
        else out << d << "\n";
    }
    if (c.format == "json") out << arr_j.dump(2) << "\n";
    return Ok;
}

inline int cmd_certify(const RunConfig& c, std::ostream& out) {
    auto arr = read_arrangement(c.inputs[0]);
    auto m = model_for(c, arr);
    bool all = true;
    json res = json::array();
    for (const auto& K : coset_files(c, 1)) {
        auto cert = certify_coset(m, K, c.d, c.seed, true, c.trials, c.prime);
        all = all && cert.certified;
        if (c.format == "json") {
            res.push_back({{"coset", coset_json(K)}, {"certificate", certificate_json(cert)}});
        } else {
            out << (cert.certified ? "certified" : "not certified") << " in V_" << c.d << ": " << K.parametrization_string()
                << "\n  rank " << cert.rank << " (bound " << cert.bound << "), generic depth " << cert.generic_depth
                << ", oracle rank " << cert.oracle_rank << "\n";
            if (!cert.reason.empty()) out << "  " << cert.reason << "\n";
        }
    }
    if (c.format == "json") out << res.dump(2) << "\n";
    return all ? Ok : NegativeResult;
}

inline int cmd_intersect(const RunConfig& c, std::ostream& out) {
    auto cosets = coset_files(c, 0);
    std::vector<TorusCoset> acc{cosets.at(0)};
    for (std::size_t i = 1; i < cosets.size(); ++i) {
        std::vector<TorusCoset> next;
        for (const auto& K : acc)
            for (const auto& L : coset_intersect(K, cosets[i])) next.push_back(L);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        acc = std::move(next);
    }
    if (c.format == "json") {
        json a = json::array();
        for (const auto& K : acc) a.push_back(coset_json(K));
        out << a.dump(2) << "\n";
    } else {
        out << acc.size() << " coset(s)\n";
        for (const auto& K : acc) out << "  dim " << K.dim() << "  " << K.parametrization_string() << "\n";
    }
    return acc.empty() ? NegativeResult : Ok;
}

inline int cmd_search(const RunConfig& c, std::ostream& out) {
    auto arr = read_arrangement(c.inputs[0]);
    auto m = model_for(c, arr);
    auto o = analysis_options(c);
    auto a = analyze(m, o);
    if (c.format == "json") {
        json r = json::array();
        for (const auto& t : a.translated)
            r.push_back({{"id", translated_id(t)}, {"pattern", t.pattern}, {"coset", coset_json(t.coset)},
                         {"certificate", certificate_json(t.certificate)}});
        out << r.dump(2) << "\n";
    } else {
        out << a.translated.size() << " translated component(s) in V_" << c.d << "\n";
        for (const auto& t : a.translated)
            out << "  " << translated_id(t) << "  " << t.coset.parametrization_string() << "  generic depth "
                << t.certificate.generic_depth << "\n";
    }
    return a.translated.empty() ? NegativeResult : Ok;
}

inline int cmd_scan(const RunConfig& c, std::ostream& out) {
    auto arr = read_arrangement(c.inputs[0]);
    auto m = model_for(c, arr);
    std::size_t budget = c.budget ? *c.budget : 100000;
    auto set = scan_search_set(m.n(), characters(c), coset_files(c, 1), c.orders, budget);
    auto pts = scan_points(m, set, c.d);
    if (c.format == "json") {
        json a = json::array();
        for (const auto& p : pts) a.push_back({{"character", character_json(p)}, {"depth", m.depth(p)}});
        out << json{{"searched", set.size()}, {"points", a}}.dump(2) << "\n";
    } else {
        out << pts.size() << " of " << set.size() << " character(s) with depth >= " << c.d << "\n";
        for (const auto& p : pts) out << "  " << format_character(p) << "  depth " << m.depth(p) << "\n";
    }
    return pts.empty() ? NegativeResult : Ok;
}

inline int cmd_report(const RunConfig& c, std::ostream& out) {
    auto arr = read_arrangement(c.inputs[0]);
    auto m = model_for(c, arr);
    auto a = analyze(m, analysis_options(c));
    auto comps = component_inputs(a, characters(c));
    for (const auto& K : coset_files(c, 1)) comps.push_back({"supplied(" + K.parametrization_string() + ")", K, "supplied"});
    auto rep = char_poset_report(m, comps);
    if (c.format == "json") out << report_json(rep).dump(2) << "\n";
    else out << report_text(rep);
    return Ok;
}

inline int cmd_reproduce(const RunConfig& c, std::ostream& out) {
    auto dir = c.fixtures.empty() ? default_fixture_dir() : c.fixtures;
    bool ok = true;
    json all = json::array();
    std::vector<std::string> ids = c.inputs;
    if (ids.size() == 1 && ids[0] == "all") ids = reproduction_ids();
    for (const auto& id : ids) {
        auto r = reproduce(id, dir, analysis_options(c));
        ok = ok && r.ok();
        if (c.format == "json") all.push_back(reproduction_json(r));
        else out << reproduction_text(r);
    }
    if (c.format == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return ok ? Ok : NegativeResult;
}

}  // namespace detail

/// Executes one command; errors become exit codes (and JSON on stdout with --format json).
inline int run(const RunConfig& config, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        if (config.format == "json") out << json{{"error", kind}, {"message", msg}, {"exit", code}}.dump(2) << "\n";
        else err << "error: " << msg << "\n";
        return code;
    };
    try {
        validate_config(config);
        if (config.threads) thread_override() = config.threads;
        const auto& cmd = config.command;
        if (cmd == "poset") return detail::cmd_poset(config, out);
        if (cmd == "wiring") return detail::cmd_wiring(config, out);
        if (cmd == "present") return detail::cmd_present(config, out);
        if (cmd == "alexmat") return detail::cmd_alexmat(config, out);
        if (cmd == "resonance") return detail::cmd_resonance(config, out);
        if (cmd == "depth") return detail::cmd_depth(config, out);
        if (cmd == "certify") return detail::cmd_certify(config, out);
        if (cmd == "intersect") return detail::cmd_intersect(config, out);
        if (cmd == "search-translated") return detail::cmd_search(config, out);
        if (cmd == "scan") return detail::cmd_scan(config, out);
        if (cmd == "report") return detail::cmd_report(config, out);
        return detail::cmd_reproduce(config, out);
    } catch (const BudgetExceeded& e) {
        return fail(BudgetError, "budget", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(UsageError, "input", e.what());
    } catch (const std::out_of_range& e) {
        return fail(UsageError, "input", e.what());
    } catch (const json::exception& e) {
        return fail(UsageError, "input", e.what());
    } catch (const std::domain_error& e) {
        return fail(UsageError, "input", e.what());
    }
}

}  // namespace charvar
