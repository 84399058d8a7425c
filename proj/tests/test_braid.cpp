#include "charvar/io.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace charvar;

TEST(Word, FreeReduction) {
    Word w{1, 2, -2, -1, 3};
    EXPECT_EQ(w, (Word{3}));
    EXPECT_TRUE((w * w.inverse()).empty());
    EXPECT_EQ(Word::generator(1, -2).str(), "x2^-2");
    EXPECT_EQ((Word{1}).conjugated_by(Word{2}), (Word{-2, 1, 2}));
    EXPECT_THROW(Word({0}), std::invalid_argument);
}

TEST(Artin, GeneratorImages) {
    auto img = artin_generator_images(3, {0, 2, 1});
    // A_13 on x_1, x_2, x_3
    EXPECT_EQ(img[0], (Word{1, 3, 1, -3, -1}));
    EXPECT_EQ(img[2], (Word{1, 3, -1}));
    EXPECT_EQ(img[1], (Word{1, 3, -1, -3, 2, 3, 1, -3, -1}));
}

TEST(Artin, Properties) {
    auto f = props::product_fixing(21);
    EXPECT_TRUE(f.ok) << f.detail;
}

TEST(Artin, FullTwistIsCentral) {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 5; ++n) {
        IndexSet all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        auto delta = full_twist(all, n);
        for (int t = 0; t < 5; ++t) {
            auto b = props::random_braid(rng, n, 3);
            EXPECT_TRUE(braid_equal(delta * b, b * delta));
        }
    }
}

TEST(Artin, ParseBraid) {
    auto b = parse_pure_braid("A1,3^-1 A1,2,3", 3);
    EXPECT_EQ(b.letters.size(), 4u);
    EXPECT_TRUE(braid_equal(parse_pure_braid("A1,2,3", 3), parse_pure_braid("A1,2 A1,3 A2,3", 3)));
    EXPECT_THROW(parse_pure_braid("A1,4", 3), std::invalid_argument);
    EXPECT_THROW(parse_pure_braid("B1,2", 3), std::invalid_argument);
}

TEST(Presentation, FiberMonodromyOfFigures) {
    for (const char* f : {"a3-decone.json", "b3-decone.json", "deleted-b3-decone.json"}) {
        auto fx = read_json_file(props::fixture(f));
        auto a = arrangement_from_json(fx);
        RationalVector dir{json_rational(fx["direction"][0]), json_rational(fx["direction"][1])};
        auto P = fibered_presentation(a, dir);
        const auto& want = fx["expect"]["fiber_monodromy"];
        ASSERT_EQ(P.fiber_monodromy.size(), want.size()) << f;
        for (std::size_t j = 0; j < want.size(); ++j)
            EXPECT_TRUE(braid_equal(P.fiber_monodromy[j], parse_pure_braid(want[j], static_cast<int>(P.wires))))
                << f << " fiber " << j + 1 << ": " << P.fiber_monodromy[j].str();
        EXPECT_TRUE(P.relators_homologically_trivial());
        EXPECT_EQ(P.relators.size(), P.wires * P.fiber_monodromy.size());
    }
}

TEST(Presentation, TrivialMonodromyGivesCommutator) {
    // one wire crossed by one parallel fiber: Z^2
    auto a = make_arrangement(2, false, {{0, 1, 0}, {1, 0, 0}});
    auto P = fibered_presentation(a, {1, 0});
    ASSERT_EQ(P.relators.size(), 1u);
    EXPECT_EQ(P.relators[0].str(P.names()), "y1^-1 x1 y1 x1^-1");
}

TEST(Presentation, BraidMonodromyCounts) {
    for (const char* f : {"a3.json", "b3.json", "grunbaum.json"}) {
        auto arr = read_arrangement(props::fixture(f));
        AlexanderModel m(arr);
        const auto& P = m.presentation();
        EXPECT_EQ(P.rank(), arr.size() - 1) << f;
        std::size_t want = 0;
        for (const auto& fl : intersection_data(m.affine()).flats) want += fl.size() - 1;
        EXPECT_EQ(P.relators.size(), want) << f;
        EXPECT_TRUE(P.relators_homologically_trivial()) << f;
    }
}

TEST(Presentation, NotFiberedIsAnInputError) {
    auto d = decone(read_arrangement(props::fixture("grunbaum.json")));
    EXPECT_THROW(fibered_presentation(d.affine, {1, 0}), std::invalid_argument);
}
