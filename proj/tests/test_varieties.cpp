#include "charvar/pipeline.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace charvar;

namespace {

Arrangement load(const std::string& f) { return read_arrangement(props::fixture(f)); }

TorusCoset random_coset(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> e(-2, 2), rows(0, 2), rot(0, 3);
    IntegerMatrix L(static_cast<std::size_t>(rows(rng)), IntegerVector(n));
    for (auto& r : L)
        for (auto& x : r) x = e(rng);
    Character t(n);
    for (auto& x : t) x = Rational(rot(rng), 4);
    return TorusCoset::from_lattice(n, L, t);
}

// all characters with rotations in (1/M)Z
std::vector<Character> torsion(std::size_t n, long M) {
    std::vector<Character> out;
    std::vector<long> k(n, 0);
    while (true) {
        Character q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = Rational(k[i], M);
        out.push_back(q);
        std::size_t p = 0;
        while (p < n && ++k[p] == M) k[p++] = 0;
        if (p == n) return out;
    }
}

std::vector<TorusCoset> canonical(std::vector<TorusCoset> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<TorusCoset> meet(const std::vector<TorusCoset>& a, const TorusCoset& b) {
    std::vector<TorusCoset> out;
    for (const auto& k : a)
        for (const auto& x : coset_intersect(k, b)) out.push_back(x);
    return canonical(out);
}

}  // namespace

TEST(Coset, CanonicalFormIgnoresParametrization) {
    auto C = deleted_b3_translated_component();
    // s -> -s^-1: exponents negated, translate moved by s = -1
    IntegerMatrix B{{-1}, {1}, {1}, {-1}, {-2}, {0}, {2}, {0}};
    Character rho{Rational(1, 2), 0, 0, Rational(1, 2), 0, Rational(1, 2), 0, Rational(1, 2)};
    EXPECT_EQ(TorusCoset::from_parametrization(8, B, rho), C);
    EXPECT_EQ(C.dim(), 1u);
    EXPECT_FALSE(C.contains_identity());
    EXPECT_TRUE(C.essential());
    EXPECT_TRUE(C.satisfies_product_condition());
    EXPECT_TRUE(C.contains(C.sample({Rational(2, 7)})));
}

TEST(Coset, IntersectionAgreesWithTorsionPoints) {
    std::mt19937_64 rng(51);
    const std::size_t n = 3;
    const long M = 4;
    auto pts = torsion(n, M);
    for (int t = 0; t < 40; ++t) {
        auto a = random_coset(rng, n), b = random_coset(rng, n);
        auto I = coset_intersect(a, b);
        for (const auto& q : pts) {
            bool both = a.contains(q) && b.contains(q);
            bool any = std::any_of(I.begin(), I.end(), [&](const TorusCoset& k) { return k.contains(q); });
            ASSERT_EQ(both, any) << format_character(q);
        }
    }
}

TEST(Coset, IntersectionIsCommutativeAndAssociative) {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 40; ++t) {
        auto a = random_coset(rng, 4), b = random_coset(rng, 4), c = random_coset(rng, 4);
        EXPECT_EQ(canonical(coset_intersect(a, b)), canonical(coset_intersect(b, a)));
        EXPECT_EQ(meet(meet({a}, b), c), meet(meet({b}, c), a));
    }
}

TEST(Coset, Containment) {
    auto C = deleted_b3_translated_component();
    auto rho1 = parse_character("0,1/2,1/2,0,0,1/2,0,1/2");
    EXPECT_TRUE(coset_contained(TorusCoset::point(rho1), C));
    EXPECT_FALSE(coset_contained(C, TorusCoset::point(rho1)));
    EXPECT_TRUE(coset_contained(C, C));
}

TEST(Resonance, ComponentsAreResonant) {
    for (const char* f : {"a3.json", "non-fano.json", "deleted-b3.json", "b3.json"}) {
        auto arr = load(f);
        auto os = os_algebra(arr);
        std::mt19937_64 rng(53);
        for (const auto& c : resonance_components(arr, 1).components) {
            auto lambda = detail::sample_subspace(c.basis, rng);
            long d = resonance_depth(os, lambda);
            EXPECT_GE(d, 1) << f << " " << c.name();
            if (c.kind == ComponentKind::Local) { EXPECT_GE(d, static_cast<long>(c.blocks[0].size()) - 2); }
        }
    }
}

TEST(Resonance, BudgetIsEnforced) {
    ResonanceOptions o;
    o.node_budget = 3;
    EXPECT_THROW(resonance_components(load("b3.json"), 1, o), BudgetExceeded);
}

TEST(Varieties, ExpTangentCone) {
    for (const char* f : {"a3.json", "non-fano.json", "deleted-b3.json"}) {
        AlexanderModel m(load(f));
        auto o = props::exp_tangent_cone(m, resonance_components(m.arrangement(), 1).components, 54);
        EXPECT_TRUE(o.ok) << f << ": " << o.detail;
    }
}

TEST(Varieties, CertifiedCosetsHoldAtTorsionSamples) {
    struct Case {
        const char* file;
        TorusCoset coset;
    };
    auto b3 = read_json_file(props::fixture("b3.json"));
    std::vector<Case> cases{{"deleted-b3.json", deleted_b3_translated_component()},
                            {"b3.json", coset_from_json(b3["expect"]["gamma"])}};
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<int> num(0, 11);
    for (const auto& c : cases) {
        AlexanderModel m(load(c.file));
        auto cert = certify_coset(m, c.coset, 1, 9);
        ASSERT_TRUE(cert.certified) << c.file;
        for (int t = 0; t < 10; ++t) {
            RationalVector k(c.coset.dim());
            for (auto& x : k) x = Rational(num(rng), 12);
            auto q = c.coset.sample(k);
            EXPECT_TRUE(verify_point(m, q, 1).holds) << c.file << " " << format_character(q);
        }
    }
}

TEST(Varieties, CertificationRejects) {
    AlexanderModel m(load("deleted-b3.json"));
    // C with its translate removed is a subtorus through 1 that is not in V_1
    auto C = deleted_b3_translated_component();
    auto K = TorusCoset::from_lattice(8, C.lattice(), Character(8, Rational(0)));
    auto cert = certify_coset(m, K, 1);
    EXPECT_FALSE(cert.certified);
    EXPECT_EQ(cert.generic_depth, 0);
    EXPECT_EQ(cert.oracle_rank, cert.rank);
    // leaving the subtorus prod t = 1 is reported, not certified
    auto off = TorusCoset::point(parse_character("1/2,0,0,0,0,0,0,0"));
    EXPECT_FALSE(certify_coset(m, off, 1).certified);
    EXPECT_THROW(m.depth(parse_character("1/2,0,0,0,0,0,0,0")), std::invalid_argument);
}

TEST(Varieties, GenericTorsionPointIsOffV1) {
    AlexanderModel m(load("a3.json"));
    std::mt19937_64 rng(56);
    std::uniform_int_distribution<int> k(1, 6);
    Character q(6);
    Rational s = 0;
    for (std::size_t j = 0; j + 1 < 6; ++j) {
        q[j] = Rational(k(rng), 7);
        s += q[j];
    }
    q[5] = mod1(-s);
    EXPECT_EQ(m.depth(q), 0);
}

TEST(Varieties, ScanFindsTheDepthTwoPoints) {
    AlexanderModel m(load("deleted-b3.json"));
    auto C = deleted_b3_translated_component();
    auto set = scan_search_set(8, {}, {C}, 2, 1000);
    auto pts = scan_points(m, set, 2);
    std::set<Character> got(pts.begin(), pts.end());
    EXPECT_TRUE(got.count(parse_character("0,1/2,1/2,0,0,1/2,0,1/2")));
    EXPECT_TRUE(got.count(parse_character("1/2,0,0,1/2,0,1/2,0,1/2")));
    EXPECT_THROW(scan_search_set(8, {}, {TorusCoset::from_lattice(8, {}, Character(8, Rational(0)))}, 4, 100), BudgetExceeded);
}

TEST(Varieties, SearchIsEmptyWithoutThePattern) {
    AlexanderModel m(load("b3.json"));
    auto a = analyze(m);
    EXPECT_TRUE(a.translated.empty());
}

TEST(Report, SingleLocalComponent) {
    AlexanderModel m(load("a3.json"));
    auto comps = local_components(m.arrangement());
    auto rep = char_poset_report(m, {{comps[0].name(), exp_coset(comps[0], 6), "local"}});
    EXPECT_EQ(rep.nodes.size(), 1u);
    EXPECT_TRUE(rep.edges.empty());
    EXPECT_EQ(rep.nodes[0].depth, 1);
}
