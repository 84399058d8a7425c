#include "charvar/cyclotomic.hpp"
#include "charvar/linalg.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>

using namespace charvar;

namespace {

std::complex<double> numeric(const Cyclo& c) {
    // independent evaluation: sum c_i zeta^i with zeta = exp(2 pi i / N)
    const double pi = std::acos(-1.0);
    std::complex<double> z = std::polar(1.0, 2 * pi / static_cast<double>(c.conductor())), acc = 0, p = 1;
    for (const auto& x : c.coefficients()) {
        acc += p * x.convert_to<double>();
        p *= z;
    }
    return acc;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-4, 4);
    IntegerMatrix m(r, IntegerVector(c));
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

}  // namespace

TEST(Rational, ParsesAndReduces) {
    EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_EQ(mod1(Rational(-7, 4)), Rational(1, 4));
    EXPECT_EQ(floor(Rational(-1, 3)), Integer(-1));
    EXPECT_EQ(to_string(Rational(Integer(3), Integer(-6))), "-1/2");
}

TEST(Cyclotomic, PolynomialDegreesAreTotients) {
    for (long n = 1; n <= 30; ++n) EXPECT_EQ(CycloContext::cyclotomic_polynomial(n).size() - 1, static_cast<std::size_t>(totient(n))) << n;
    auto p12 = CycloContext::cyclotomic_polynomial(12);  // x^4 - x^2 + 1
    EXPECT_EQ(p12, (IntegerVector{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootsMatchNumericEvaluation) {
    for (long n : {3L, 4L, 5L, 6L, 8L, 12L, 15L})
        for (long k = 0; k < n; ++k) {
            auto z = numeric(Cyclo::root(k, n));
            auto want = std::polar(1.0, 2 * std::acos(-1.0) * static_cast<double>(k) / static_cast<double>(n));
            EXPECT_NEAR(std::abs(z - want), 0.0, 1e-9) << k << "/" << n;
        }
}

TEST(Cyclotomic, FieldArithmeticAgreesWithComplexNumbers) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> k(0, 11), c(-3, 3);
    for (int t = 0; t < 200; ++t) {
        Cyclo a = Cyclo(c(rng)) + Cyclo::root(k(rng), 12) * Cyclo(c(rng));
        Cyclo b = Cyclo(c(rng)) * Cyclo::root(k(rng), 4) + Cyclo::root(k(rng), 3);
        EXPECT_NEAR(std::abs(numeric(a * b) - numeric(a) * numeric(b)), 0.0, 1e-9);
        EXPECT_NEAR(std::abs(numeric(a + b) - (numeric(a) + numeric(b))), 0.0, 1e-9);
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
            EXPECT_NEAR(std::abs(numeric(a / b) - numeric(a) / numeric(b)), 0.0, 1e-8);
        }
    }
}

TEST(Cyclotomic, RootsAndEmbeddings) {
    auto z = Cyclo::root(1, 12);
    EXPECT_EQ(z.pow(12), Cyclo(1));
    EXPECT_EQ(z.pow(6), Cyclo(-1));
    EXPECT_EQ(Cyclo::root(1, 3) * Cyclo::root(1, 4), Cyclo::root(7, 12));
    EXPECT_EQ(Cyclo::from_rotation(Rational(-1, 2)), Cyclo(-1));
    EXPECT_TRUE(Cyclo::root(2, 6) == Cyclo::root(1, 3));
    EXPECT_EQ(Cyclo::root(1, 5).embed(15), Cyclo::root(3, 15));
    EXPECT_EQ(Cyclo::root(1, 5).inverse(), Cyclo::root(4, 5));
}

TEST(Smith, FactorizationAndDivisibility) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
        auto B = random_matrix(rng, r, c);
        auto s = smith_normal_form(B, c);
        auto UBV = multiply(multiply(s.U, B, c), s.V, c);
        EXPECT_EQ(UBV, s.D);
        auto d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i + 1] != 0) { EXPECT_EQ(d[i + 1] % d[i], 0); }
        EXPECT_EQ(s.rank, integer_rank(B, c));
    }
}

TEST(Smith, KnownExample) {
    IntegerMatrix B{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto s = smith_normal_form(B, 3);
    EXPECT_EQ(s.diagonal(), (IntegerVector{2, 6, 12}));
}

TEST(Lattice, KernelAndSaturation) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 40; ++t) {
        auto B = random_matrix(rng, 2, 5);
        auto K = integer_kernel(B, 5);
        EXPECT_EQ(K.size(), 5 - integer_rank(B, 5));
        for (const auto& k : K)
            for (const auto& row : B) {
                Integer dot = 0;
                for (std::size_t j = 0; j < 5; ++j) dot += row[j] * k[j];
                EXPECT_EQ(dot, 0);
            }
    }
    IntegerMatrix twice{{2, 0, 2}};
    EXPECT_EQ(saturate(twice, 3), (IntegerMatrix{{1, 0, 1}}));
    EXPECT_EQ(hermite_normal_form({{0, 2}, {1, 1}}, 2), (IntegerMatrix{{1, 1}, {0, 2}}));
}

TEST(FiniteField, PrimesAndRoots) {
    for (long n : {1L, 2L, 3L, 4L, 6L, 12L}) {
        auto p = default_oracle_prime(n);
        EXPECT_TRUE(is_prime(p));
        EXPECT_EQ((p - 1) % static_cast<std::uint64_t>(n), 0u);
        auto w = root_of_unity_mod(n, p);
        EXPECT_EQ(powmod(w, static_cast<std::uint64_t>(n), p), 1u);
        for (long d = 1; d < n; ++d)
            if (n % d == 0) { EXPECT_NE(powmod(w, static_cast<std::uint64_t>(d), p), 1u); }
    }
    EXPECT_EQ(rational_mod(Rational(1, 2), 7), 4u);
}
