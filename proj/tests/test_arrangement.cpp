#include "charvar/io.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace charvar;

namespace {

Arrangement load(const std::string& f) { return read_arrangement(props::fixture(f)); }

// brute force: lines i, j, k concurrent iff the 3x3 determinant vanishes
bool concurrent(const Arrangement& a, int i, int j, int k) {
    const auto &x = a.forms[static_cast<std::size_t>(i)], &y = a.forms[static_cast<std::size_t>(j)], &z = a.forms[static_cast<std::size_t>(k)];
    Rational det = x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) + x[2] * (y[0] * z[1] - y[1] * z[0]);
    return det == 0;
}

}  // namespace

TEST(Arrangement, CensusOfFixtures) {
    struct Case {
        const char* file;
        std::map<std::size_t, std::size_t> census;
    };
    for (const auto& c : std::vector<Case>{{"a3.json", {{2, 3}, {3, 4}}},
                                           {"b3.json", {{2, 6}, {3, 4}, {4, 3}}},
                                           {"deleted-b3.json", {{2, 4}, {3, 6}, {4, 1}}},
                                           {"non-fano.json", {{2, 3}, {3, 6}}}}) {
        auto L = intersection_data(load(c.file));
        std::map<std::size_t, std::size_t> all, multiple;
        for (const auto& f : L.flats) ++all[f.size()];
        for (const auto& [k, v] : c.census)
            if (k >= 3) multiple[k] = v;
        EXPECT_EQ(all, c.census) << c.file;
        EXPECT_EQ(L.census(), multiple) << c.file;
    }
}

TEST(Arrangement, FlatsAgreeWithDeterminants) {
    for (const char* f : {"b3.json", "grunbaum.json", "ziegler-z1.json"}) {
        auto a = load(f);
        auto L = intersection_data(a);
        std::size_t triples = 0;
        for (const auto& fl : L.flats) triples += fl.size() * (fl.size() - 1) * (fl.size() - 2) / 6;
        std::size_t brute = 0;
        int n = static_cast<int>(a.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) brute += concurrent(a, i, j, k);
        EXPECT_EQ(triples, brute) << f;
    }
}

TEST(Arrangement, RejectsBadInput) {
    EXPECT_THROW(make_arrangement(3, true, {{1, 0, 0, 0}, {2, 0, 0, 0}}), std::invalid_argument);
    EXPECT_THROW(make_arrangement(3, true, {{0, 0, 0, 0}}), std::invalid_argument);
    EXPECT_THROW(make_arrangement(3, true, {{1, 0, 0}}), std::invalid_argument);
    EXPECT_THROW(parse_arrangement("{\"forms\": [[1, \"a\", 0, 0]]}"), std::invalid_argument);
    EXPECT_THROW(read_arrangement("/nonexistent.json"), std::invalid_argument);
}

TEST(Arrangement, JsonRoundTrip) {
    auto a = load("grunbaum.json");
    auto b = arrangement_from_json(arrangement_to_json(a));
    EXPECT_EQ(a.forms, b.forms);
    EXPECT_EQ(a.labels, b.labels);
}

TEST(Arrangement, DeconeThenConeKeepsTheLattice) {
    for (const char* f : {"a3.json", "deleted-b3.json", "falk-f1.json"}) {
        auto a = load(f);
        for (int h : {0, static_cast<int>(a.size()) - 1}) {
            auto d = decone(a, h);
            auto back = cone(d.affine);
            // map back to the original indices; the new line stands for h
            std::set<IndexSet> want, got;
            for (const auto& fl : intersection_data(a).flats) want.insert(fl);
            for (auto fl : intersection_data(back).flats) {
                for (auto& i : fl) i = i < static_cast<int>(d.original.size()) ? d.original[static_cast<std::size_t>(i)] : h;
                std::sort(fl.begin(), fl.end());
                got.insert(fl);
            }
            EXPECT_EQ(got, want) << f << " at " << h;
        }
    }
}

TEST(Wiring, OneVertexPerAffineFlat) {
    auto d = decone(load("b3.json"));
    auto dir = suggest_direction(d.affine);
    EXPECT_TRUE(is_generic_direction(d.affine, dir));
    auto wd = wiring_diagram(d.affine, dir);
    EXPECT_EQ(wd.vertices.size(), intersection_data(d.affine).flats.size());
    for (const auto& v : wd.vertices) {
        // J lies strictly between the extreme wires of the vertex
        for (int j : v.J) {
            EXPECT_GT(j, v.wires.front());
            EXPECT_LT(j, v.wires.back());
        }
    }
}

TEST(Wiring, FiberedDiagramOfTheFigure) {
    auto fx = read_json_file(props::fixture("deleted-b3-decone.json"));
    auto a = arrangement_from_json(fx);
    RationalVector dir{1, 0};
    EXPECT_TRUE(missing_fibers(a, dir).empty());
    auto wd = fibered_wiring_diagram(a, dir);
    EXPECT_EQ(wd.n, 4u);
    EXPECT_EQ(wd.fiber_lines, (std::vector<int>{4, 5, 6}));
    EXPECT_FALSE(missing_fibers(a, RationalVector{0, 1}).empty());
}

TEST(Embeddings, BraidSubarrangementsByBruteForce) {
    auto a3 = intersection_data(load("a3.json"));
    for (const char* f : {"non-fano.json", "deleted-b3.json", "b3.json"}) {
        auto a = load(f);
        auto L = intersection_data(a);
        auto subs = find_subarrangements(L, a3);
        // brute force: 6-subsets with exactly four concurrent triples and no four concurrent lines
        std::size_t brute = 0;
        int n = static_cast<int>(a.size());
        std::vector<int> idx(6);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == 6) {
                int triples = 0;
                bool quad = false;
                for (int i = 0; i < 6; ++i)
                    for (int j = i + 1; j < 6; ++j)
                        for (int k = j + 1; k < 6; ++k) {
                            if (!concurrent(a, idx[i], idx[j], idx[k])) continue;
                            ++triples;
                            for (int l = k + 1; l < 6; ++l) quad = quad || (concurrent(a, idx[i], idx[j], idx[l]) && concurrent(a, idx[i], idx[k], idx[l]));
                        }
                brute += triples == 4 && !quad;
                return;
            }
            for (int i = start; i < n; ++i) {
                idx[static_cast<std::size_t>(depth)] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
        EXPECT_EQ(subs.size(), brute) << f;
    }
}
