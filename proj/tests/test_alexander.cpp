#include "charvar/io.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace charvar;

TEST(Fox, Identities) {
    auto o = props::fox_identities(41, 80);
    EXPECT_TRUE(o.ok) << o.detail;
}

TEST(Fox, CommutatorDerivative) {
    // d[x1,x2]/dx1 = 1 - x1 x2 x1^-1, abelianized 1 - t2
    Word c{1, 2, -1, -2};
    auto d = fox_derivative(c, 0).abelianize(2);
    IntLaurent want(2);
    want.add_term({0, 0}, 1);
    want.add_term({0, 1}, -1);
    EXPECT_EQ(d, want);
    EXPECT_EQ(abelian_fox_row(c, 2)[0], want);
}

TEST(Gassner, Multiplicative) {
    auto o = props::gassner_multiplicativity(42, 30);
    EXPECT_TRUE(o.ok) << o.detail;
}

TEST(Gassner, GeneratorInverse) {
    auto g = gassner(PureBraid::generator(3, 0, 2));
    auto h = gassner(PureBraid::generator(3, 0, 2, -1));
    EXPECT_EQ(g * h, IntLaurentMatrix::identity(3, torus_variables(3)));
}

TEST(Alexander, FoxRowsAreBlockRowsTimesFiberInverse) {
    auto fx = read_json_file(props::fixture("deleted-b3-decone.json"));
    auto P = fibered_presentation(arrangement_from_json(fx), {1, 0});
    auto A = alexander_matrix(P);
    auto B = block_alexander(P);
    ASSERT_EQ(A.rows, B.rows);
    for (std::size_t j = 0; j < P.fiber_monodromy.size(); ++j)
        for (std::size_t i = 0; i < P.wires; ++i) {
            auto r = j * P.wires + i;
            auto yinv = IntLaurent::variable(A.nvars(), P.wires + j, -1);
            for (std::size_t k = 0; k < A.cols; ++k) EXPECT_EQ(A.entries[r][k], yinv * B.entries[r][k]) << r << "," << k;
        }
}

TEST(Alexander, RowsKillTheAugmentationVector) {
    // sum_k A_rk (t_k - 1) = 0 for every relator (fundamental formula, abelianized)
    for (const char* f : {"a3.json", "deleted-b3.json", "grunbaum.json"}) {
        AlexanderModel m(read_arrangement(props::fixture(f)));
        const auto& A = m.matrix();
        for (std::size_t r = 0; r < A.rows; ++r) {
            IntLaurent acc(A.nvars());
            for (std::size_t k = 0; k < A.cols; ++k)
                acc += A.entries[r][k] * (IntLaurent::variable(A.nvars(), k) - IntLaurent::constant(A.nvars(), 1));
            EXPECT_TRUE(acc.is_zero()) << f << " row " << r;
        }
    }
}

TEST(Alexander, PresentationIndependence) {
    auto o = props::presentation_independence(43, 25);
    EXPECT_TRUE(o.ok) << o.detail;
}

TEST(Alexander, DepthIndependentOfDirectionAndDecone) {
    auto arr = read_arrangement(props::fixture("deleted-b3.json"));
    AlexanderModel a(arr), b(arr, 0), c(arr, -1, RationalVector{3, 1});
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> k(0, 3);
    for (int t = 0; t < 25; ++t) {
        Character q(arr.size());
        Rational sum = 0;
        for (std::size_t j = 0; j + 1 < q.size(); ++j) {
            q[j] = Rational(k(rng), t % 2 ? 4 : 2);
            sum += q[j];
        }
        q.back() = mod1(-sum);
        long d = a.depth(q);
        EXPECT_EQ(d, b.depth(q)) << format_character(q);
        EXPECT_EQ(d, c.depth(q)) << format_character(q);
    }
}

TEST(OrlikSolomon, LocalResonanceDepth) {
    auto arr = read_arrangement(props::fixture("b3.json"));
    auto os = os_algebra(arr);
    auto L = intersection_data(arr);
    for (const auto& fl : L.multiple_points()) {
        RationalVector lambda(arr.size(), Rational(0));
        // generic weight on the flat summing to zero
        for (std::size_t i = 0; i + 1 < fl.size(); ++i) lambda[static_cast<std::size_t>(fl[i])] = Rational(static_cast<long>(i) + 2);
        Rational s = 0;
        for (const auto& x : lambda) s += x;
        lambda[static_cast<std::size_t>(fl.back())] = -s;
        EXPECT_EQ(resonance_depth(os, lambda), static_cast<long>(fl.size()) - 2) << format_set(fl);
    }
    EXPECT_EQ(resonance_depth(os, RationalVector(arr.size(), Rational(0))), static_cast<long>(arr.size()));
    EXPECT_THROW(resonance_depth(os, RationalVector(3, Rational(1))), std::invalid_argument);
}
