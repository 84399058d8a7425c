#pragma once

// Worked examples end to end, diffed against the expectations stored in
// the fixture files. Every failed comparison is reported.

#include "charvar/io.hpp"
#include "charvar/pipeline.hpp"

#include <filesystem>

namespace charvar {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Reproduction {
    std::string id;
    std::vector<Check> checks;
    json bundle = json::object();
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
    }
};

inline const std::vector<std::string>& reproduction_ids() {
    static const std::vector<std::string> ids{"a3", "nonfano", "b3", "deleted-b3", "grunbaum", "falk", "ziegler"};
    return ids;
}

namespace detail {

struct Checker {
    std::vector<Check>& out;

    bool expect(const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok, detail});
        return ok;
    }
    template <class A, class B>
    bool equal(const std::string& name, const A& got, const B& want) {
        std::ostringstream os;
        os << "got " << got << ", expected " << want;
        return expect(name, got == want, os.str());
    }
};

inline IndexSet one_based(const json& j) {
    IndexSet s;
    for (const auto& x : j) s.push_back(x.get<int>() - 1);
    std::sort(s.begin(), s.end());
    return s;
}

inline std::vector<IndexSet> canonical_blocks(std::vector<IndexSet> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

/// Index of the partition component with the given (1-based) blocks.
inline std::optional<std::size_t> find_partition(const Analysis& a, const json& blocks) {
    std::vector<IndexSet> want;
    for (const auto& b : blocks) want.push_back(one_based(b));
    want = canonical_blocks(want);
    for (std::size_t i = 0; i < a.resonance.components.size(); ++i) {
        const auto& c = a.resonance.components[i];
        if (c.kind == ComponentKind::Partition && canonical_blocks(c.blocks) == want) return i;
    }
    return std::nullopt;
}

inline std::size_t count_kind(const Analysis& a, ComponentKind k) {
    return static_cast<std::size_t>(std::count_if(a.resonance.components.begin(), a.resonance.components.end(),
                                                  [k](const ResonanceComponent& c) { return c.kind == k; }));
}

inline json analysis_json(const Analysis& a) {
    json comps = json::array();
    for (const auto& c : a.resonance.components) comps.push_back(resonance_component_json(c));
    json tr = json::array();
    for (const auto& t : a.translated)
        tr.push_back({{"id", translated_id(t)}, {"coset", coset_json(t.coset)}, {"certificate", certificate_json(t.certificate)}});
    return {{"resonance", comps}, {"translated", tr}, {"partition_nodes", a.resonance.nodes}};
}

inline void count_checks(Checker& ck, const std::string& tag, const Analysis& a, const json& ex) {
    if (ex.contains("local")) ck.equal(tag + "local components", count_kind(a, ComponentKind::Local), ex["local"].get<std::size_t>());
    if (ex.contains("partition_components"))
        ck.equal(tag + "partition components", count_kind(a, ComponentKind::Partition), ex["partition_components"].get<std::size_t>());
    if (ex.contains("resonance_components"))
        ck.equal(tag + "resonance components", a.resonance.components.size(), ex["resonance_components"].get<std::size_t>());
    if (ex.contains("translated")) ck.equal(tag + "translated components", a.translated.size(), ex["translated"].get<std::size_t>());
}

inline void depth_check(Checker& ck, const AlexanderModel& m, const std::string& name, const Character& t, long want) {
    ck.equal("depth at " + name, m.depth(t), want);
}

/// Deletes coordinate k (the coset must have t_k = 1 on it).
inline TorusCoset delete_coordinate(const TorusCoset& K, std::size_t k) {
    IntegerMatrix B;
    Character rho;
    for (std::size_t j = 0; j < K.ambient(); ++j) {
        if (j == k) continue;
        B.push_back(K.exponents()[j]);
        rho.push_back(K.translate()[j]);
    }
    return TorusCoset::from_parametrization(K.ambient() - 1, B, rho);
}

// ---------------------------------------------------------------- per example

inline void run_a3(const std::string& dir, const AnalysisOptions& opt, Reproduction& r) {
    Checker ck{r.checks};
    auto fx = read_json_file(dir + "/a3.json");
    const auto& ex = fx["expect"];
    AlexanderModel m(arrangement_from_json(fx));
    auto a = analyze(m, opt);
    count_checks(ck, "", a, ex);
    auto pi = find_partition(a, ex["partition"]);
    if (ck.expect("partition component (16|25|34) found", pi.has_value())) {
        auto cert = certify_coset(m, a.through_one[*pi], 1, opt.seed);
        ck.expect("partition component certified in V_1", cert.certified, "generic depth " + std::to_string(cert.generic_depth));
    }
    bool trivial = true;
    for (std::size_t i = 0; i < a.through_one.size(); ++i)
        for (std::size_t j = i + 1; j < a.through_one.size(); ++j) {
            auto I = coset_intersect(a.through_one[i], a.through_one[j]);
            if (I.size() != 1 || I[0].dim() != 0 || !is_identity(I[0].translate())) trivial = false;
        }
    ck.expect("pairwise intersections are {1}", trivial);
    auto set = scan_search_set(m.n(), {}, a.through_one, 2, opt.search_budget);
    auto v2 = scan_points(m, set, 2);
    ck.expect("V_2 scan returns only 1", v2.size() == 1 && is_identity(v2[0]),
              std::to_string(v2.size()) + " point(s) of depth >= 2 among " + std::to_string(set.size()));
    r.bundle = analysis_json(a);
}

inline void run_nonfano(const std::string& dir, const AnalysisOptions& opt, Reproduction& r) {
    Checker ck{r.checks};
    auto fx = read_json_file(dir + "/non-fano.json");
    const auto& ex = fx["expect"];
    AlexanderModel m(arrangement_from_json(fx));
    auto a = analyze(m, opt);
    count_checks(ck, "", a, ex);
    std::vector<TorusCoset> pis;
    for (const auto& p : ex["partitions"]) {
        auto i = find_partition(a, p);
        if (ck.expect("partition " + p.dump() + " found", i.has_value())) pis.push_back(a.through_one[*i]);
    }
    Character rho = character_from_json(ex["rho"]);
    if (pis.size() == 3) {
        auto I = coset_intersect(pis[0], pis[1]);
        std::vector<TorusCoset> triple;
        for (const auto& K : I)
            for (const auto& L : coset_intersect(K, pis[2])) triple.push_back(L);
        std::sort(triple.begin(), triple.end());
        triple.erase(std::unique(triple.begin(), triple.end()), triple.end());
        std::vector<TorusCoset> want{TorusCoset::point(Character(m.n(), Rational(0))), TorusCoset::point(rho)};
        std::sort(want.begin(), want.end());
        ck.expect("triple intersection of the partition components is {1, rho}", triple == want,
                  std::to_string(triple.size()) + " coset(s)");
    }
    depth_check(ck, m, "rho", rho, ex["rho_depth"].get<long>());
    r.bundle = analysis_json(a);
}

inline void run_b3(const std::string& dir, const AnalysisOptions& opt, Reproduction& r) {
    Checker ck{r.checks};
    auto fx = read_json_file(dir + "/b3.json");
    const auto& ex = fx["expect"];
    AlexanderModel m(arrangement_from_json(fx));
    auto a = analyze(m, opt);
    count_checks(ck, "", a, ex);
    auto gamma = coset_from_json(ex["gamma"]);
    auto gi = find_partition(a, ex["gamma_partition"]);
    if (ck.expect("partition (156|248|379) found", gi.has_value()))
        ck.expect("its exponential equals the stored 2-torus", a.through_one[*gi] == gamma);
    auto cert = certify_coset(m, gamma, 1, opt.seed);
    ck.expect("2-torus certified in V_1", cert.certified, "rank " + std::to_string(cert.rank));
    Character r1 = character_from_json(ex["rho1"]), r2 = character_from_json(ex["rho2"]);
    long want = ex["rho_depth"].get<long>();
    depth_check(ck, m, "rho1", r1, want);
    depth_check(ck, m, "rho2", r2, want);
    depth_check(ck, m, "rho1 rho2", character_product(r1, r2), want);
    // slice by t_3 = 1 and compare with the translated component of the deletion
    IntegerMatrix e3{IntegerVector(m.n(), 0)};
    e3[0][2] = 1;
    auto slice = coset_intersect(gamma, TorusCoset::from_lattice(m.n(), e3, Character(m.n(), Rational(0))));
    ck.equal("cosets in the slice t3 = 1", slice.size(), std::size_t{2});
    bool found = false;
    for (const auto& K : slice)
        if (delete_coordinate(K, 2) == deleted_b3_translated_component()) found = true;
    ck.expect("one slice coset is the deleted-B3 translated component", found);
    r.bundle = analysis_json(a);
}

inline bool row_matches(const IntLaurentMatrix& A, std::size_t row, const json& entries) {
    if (row >= A.rows || entries.size() != A.cols) return false;
    for (std::size_t k = 0; k < A.cols; ++k)
        if (!(A.entries[row][k] == int_laurent_from_json(entries[k], A.nvars()))) return false;
    return true;
}

inline void run_deleted_b3(const std::string& dir, const AnalysisOptions& opt, Reproduction& r) {
    Checker ck{r.checks};
    // fibered decone in the figure's labeling
    auto dfx = read_json_file(dir + "/deleted-b3-decone.json");
    auto star = arrangement_from_json(dfx);
    RationalVector dir2;
    for (const auto& x : dfx["direction"]) dir2.push_back(json_rational(x));
    auto P = fibered_presentation(star, dir2);
    ck.equal("fibered presentation wires", P.wires, std::size_t{4});
    ck.equal("fibered presentation fibers", P.fiber_monodromy.size(), std::size_t{3});
    const auto& mono = dfx["expect"]["fiber_monodromy"];
    for (std::size_t j = 0; j < mono.size() && j < P.fiber_monodromy.size(); ++j)
        ck.expect("fiber monodromy " + std::to_string(j + 1),
                  braid_equal(P.fiber_monodromy[j], parse_pure_braid(mono[j].get<std::string>(), static_cast<int>(P.wires))),
                  P.fiber_monodromy[j].str());
    auto B = block_alexander(P);
    ck.equal("block matrix rows", B.rows, std::size_t{12});
    ck.equal("block matrix columns", B.cols, std::size_t{7});
    for (const auto& [printed, spec] : dfx["printed_rows"].items())
        ck.expect("printed row " + printed, row_matches(B, spec["block_row"].get<std::size_t>() - 1, spec["entries"]));

    auto fx = read_json_file(dir + "/deleted-b3.json");
    const auto& ex = fx["expect"];
    AlexanderModel m(arrangement_from_json(fx));
    auto census = intersection_data(m.arrangement()).census();
    for (const auto& [k, v] : ex["census"].items())
        ck.equal("multiple points of size " + k, census[std::stoul(k)], v.get<std::size_t>());
    auto a = analyze(m, opt);
    count_checks(ck, "", a, ex);
    std::vector<std::string> pid;
    for (const auto& p : ex["partitions"]) {
        auto i = find_partition(a, p);
        ck.expect("partition " + p.dump() + " found", i.has_value());
        pid.push_back(i ? a.resonance.components[*i].name() : "?");
    }
    auto C = deleted_b3_translated_component();
    auto cert = certify_coset(m, C, 1, opt.seed);
    ck.expect("translated component certified in V_1", cert.certified);
    ck.equal("translated component generic depth", cert.generic_depth, 1L);
    ck.expect("search finds exactly the translated component", a.translated.size() == 1 && a.translated[0].coset == C);
    Character r1 = character_from_json(ex["rho1"]), r2 = character_from_json(ex["rho2"]);
    depth_check(ck, m, "rho1", r1, ex["rho_depth"].get<long>());
    depth_check(ck, m, "rho2", r2, ex["rho_depth"].get<long>());
    // the weight whose exponential is on V_1 but not resonant
    RationalVector lambda;
    for (const auto& x : ex["lambda"]) lambda.push_back(json_rational(x));
    depth_check(ck, m, "exp(lambda)", exp_character(lambda), 1);
    ck.equal("resonance depth at lambda", resonance_depth(os_algebra(m.arrangement()), lambda), 0L);

    auto rep = char_poset_report(m, component_inputs(a));
    ck.equal("report components", rep.totals["components"], ex["components"].get<std::size_t>());
    const std::string cid = a.translated.empty() ? "?" : translated_id(a.translated[0]);
    auto members_at = [&](const Character& q) -> std::optional<ReportEdge> {
        for (const auto& e : rep.edges)
            if (e.point == q) return e;
        return std::nullopt;
    };
    auto check_meet = [&](const std::string& name, const Character& q, std::vector<std::string> want) {
        want.push_back(cid);
        std::sort(want.begin(), want.end());
        auto e = members_at(q);
        if (!ck.expect(name + " is an intersection point", e.has_value())) return;
        auto got = e->members;
        std::sort(got.begin(), got.end());
        std::string s;
        for (const auto& g : got) s += g + " ";
        ck.expect(name + " lies exactly on the expected components", got == want, s);
        ck.equal(name + " report depth", e->depth, 2L);
    };
    if (pid.size() == 5) {
        check_meet("rho1", r1, {pid[0], pid[1], pid[2]});
        check_meet("rho2", r2, {pid[2], pid[3], pid[4]});
    }
    r.bundle = analysis_json(a);
    r.bundle["report"] = report_json(rep);
}

inline void run_grunbaum(const std::string& dir, const AnalysisOptions& opt, Reproduction& r) {
    Checker ck{r.checks};
    auto fx = read_json_file(dir + "/grunbaum.json");
    const auto& ex = fx["expect"];
    AlexanderModel m(arrangement_from_json(fx));
    auto a = analyze(m, opt);
    count_checks(ck, "", a, ex);
    std::vector<IndexSet> got, want;
    for (const auto& t : a.translated) got.push_back(t.support);
    for (const auto& s : ex["translated_supports"]) want.push_back(one_based(s));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ck.expect("translated supports", got == want);
    bool shape = std::all_of(a.translated.begin(), a.translated.end(), [](const TranslatedResult& t) {
        return t.coset.dim() == 1 && character_order(t.coset.translate()) == 2;
    });
    ck.expect("translated components are 1-dimensional with order-2 translates", shape);
    Character zeta = character_from_json(ex["zeta"]);
    Character zinv = character_power(zeta, -1);
    ck.expect("zeta in V_1", verify_point(m, zeta, 1).holds);
    ck.expect("zeta^-1 in V_1", verify_point(m, zinv, 1).holds);
    std::vector<std::pair<std::string, Character>> v2;
    for (const char* k : {"rho1", "rho2", "rho3", "rho4"}) v2.push_back({k, character_from_json(ex[k])});
    v2.push_back({"rho1 rho2", character_product(v2[0].second, v2[1].second)});
    v2.push_back({"rho3 rho4", character_product(v2[2].second, v2[3].second)});
    v2.push_back({"zeta^3", character_power(zeta, 3)});
    for (const auto& [name, q] : v2) depth_check(ck, m, name, q, 2);
    auto rep = char_poset_report(m, component_inputs(a, {zeta, zinv}));
    ck.equal("report components", rep.totals["components"], ex["components"].get<std::size_t>());
    r.bundle = analysis_json(a);
    r.bundle["report"] = report_json(rep);
}

inline void run_pair(const std::string& dir, const AnalysisOptions& opt, Reproduction& r, const std::string& f1,
                     const std::string& f2) {
    Checker ck{r.checks};
    for (const auto& f : {f1, f2}) {
        auto fx = read_json_file(dir + "/" + f + ".json");
        const auto& ex = fx["expect"];
        AlexanderModel m(arrangement_from_json(fx));
        auto a = analyze(m, opt);
        count_checks(ck, f + ": ", a, ex);
        bool shape = std::all_of(a.translated.begin(), a.translated.end(), [](const TranslatedResult& t) {
            return t.coset.dim() == 1 && character_order(t.coset.translate()) == 2;
        });
        ck.expect(f + ": translated components are 1-dimensional with order-2 translates", shape);
        if (ex.contains("components")) {
            auto rep = char_poset_report(m, component_inputs(a));
            ck.equal(f + ": report components", rep.totals["components"], ex["components"].get<std::size_t>());
            r.bundle[f] = analysis_json(a);
            r.bundle[f]["report"] = report_json(rep);
        } else {
            r.bundle[f] = analysis_json(a);
        }
    }
}

}  // namespace detail

inline std::string default_fixture_dir() {
    if (const char* env = std::getenv("CHARVAR_FIXTURES")) return env;
#ifdef CHARVAR_FIXTURE_DIR
    return CHARVAR_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

/// Runs one worked example; failures are recorded, not thrown.
inline Reproduction reproduce(const std::string& id, const std::string& fixture_dir = default_fixture_dir(),
                              const AnalysisOptions& opt = {}) {
    Reproduction r;
    r.id = id;
    if (id == "a3") detail::run_a3(fixture_dir, opt, r);
    else if (id == "nonfano") detail::run_nonfano(fixture_dir, opt, r);
    else if (id == "b3") detail::run_b3(fixture_dir, opt, r);
    else if (id == "deleted-b3") detail::run_deleted_b3(fixture_dir, opt, r);
    else if (id == "grunbaum") detail::run_grunbaum(fixture_dir, opt, r);
    else if (id == "falk") detail::run_pair(fixture_dir, opt, r, "falk-f1", "falk-f2");
    else if (id == "ziegler") detail::run_pair(fixture_dir, opt, r, "ziegler-z1", "ziegler-z2");
    else throw InputError("unknown example '" + id + "'");
    return r;
}

inline json reproduction_json(const Reproduction& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return {{"id", r.id}, {"ok", r.ok()}, {"checks", checks}, {"results", r.bundle}};
}

inline std::string reproduction_text(const Reproduction& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.ok ? "ok    " : "FAIL  ") << c.name;
        if (!c.ok && !c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    std::size_t failed = static_cast<std::size_t>(std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.ok; }));
    os << r.id << ": " << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

}  // namespace charvar
