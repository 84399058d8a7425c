#pragma once

// End-to-end analysis: resonance components, their exponentials, translated
// components from the pattern catalog, and the component list for reports.

#include "charvar/varieties.hpp"

namespace charvar {

/// Deleted B3 arrangement, xyz(x-y)(x-z)(y-z)(x-y-z)(x-y+z), labeled so
/// that its translated component has the form stored below.
inline Arrangement deleted_b3_arrangement() {
    auto v = [](long a, long b, long c) { return RationalVector{a, b, c, 0}; };
    return make_arrangement(3, true,
                            {v(1, 0, -1), v(0, 1, -1), v(1, 0, 0), v(0, 1, 0), v(1, -1, 1), v(0, 0, 1), v(1, -1, -1), v(1, -1, 0)},
                            {});
}

/// The 1-dimensional component of V_1 of the deleted B3 arrangement not through 1.
inline TorusCoset deleted_b3_translated_component() {
    IntegerMatrix B{{1}, {-1}, {-1}, {1}, {2}, {0}, {-2}, {0}};
    Character rho{0, Rational(1, 2), Rational(1, 2), 0, 0, Rational(1, 2), 0, Rational(1, 2)};
    return TorusCoset::from_parametrization(8, B, rho);
}

inline std::vector<TranslatedPattern> default_patterns() {
    return {{"deleted-B3", intersection_data(deleted_b3_arrangement()), deleted_b3_translated_component()}};
}

struct AnalysisOptions {
    long d = 1;
    long max_order = 2;
    std::uint64_t seed = 1;
    std::size_t node_budget = 1000000;
    std::size_t search_budget = 100000;
    bool translated = true;
};

struct Analysis {
    ResonanceResult resonance;
    std::vector<TorusCoset> through_one;  // exp of each resonance component
    std::vector<TranslatedResult> translated;
};

inline Analysis analyze(const AlexanderModel& model, const AnalysisOptions& opt = {},
                        const std::vector<TranslatedPattern>& patterns = default_patterns()) {
    Analysis a;
    ResonanceOptions ro;
    ro.node_budget = opt.node_budget;
    ro.seed = opt.seed;
    a.resonance = resonance_components(model.arrangement(), opt.d, ro);
    for (const auto& c : a.resonance.components) a.through_one.push_back(exp_coset(c, model.n()));
    if (opt.translated) {
        SearchOptions so;
        so.max_order = opt.max_order;
        so.d = opt.d;
        so.seed = opt.seed;
        so.budget = opt.search_budget;
        a.translated = search_translated(model, patterns, a.through_one, so);
    }
    return a;
}

inline std::string translated_id(const TranslatedResult& t) {
    std::string s = "translated(";
    for (std::size_t i = 0; i < t.support.size(); ++i) s += (i ? " " : "") + std::to_string(t.support[i] + 1);
    return s + ")";
}

/// Components for the report: resonance-derived, translated, then the given points.
inline std::vector<ComponentInput> component_inputs(const Analysis& a, const std::vector<Character>& points = {}) {
    std::vector<ComponentInput> out;
    for (std::size_t i = 0; i < a.resonance.components.size(); ++i) {
        const auto& c = a.resonance.components[i];
        out.push_back({c.name(), a.through_one[i], c.kind == ComponentKind::Local ? "local" : "partition"});
    }
    std::map<std::string, int> used;
    for (const auto& t : a.translated) {
        std::string id = translated_id(t);
        if (int k = used[id]++; k > 0) id += "#" + std::to_string(k + 1);
        out.push_back({id, t.coset, "translated"});
    }
    for (const auto& p : points) out.push_back({"point(" + format_character(p) + ")", TorusCoset::point(p), "isolated point"});
    return out;
}

}  // namespace charvar
