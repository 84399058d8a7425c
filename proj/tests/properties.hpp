#pragma once

// Seeded property checks shared by the unit tests and the acceptance runner.

#include "charvar/io.hpp"
#include "charvar/pipeline.hpp"

#include <random>

namespace props {

using namespace charvar;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

inline std::string fixture(const std::string& name) { return std::string(CHARVAR_FIXTURE_DIR) + "/" + name; }

inline Word random_word(std::mt19937_64& rng, int gens, int length) {
    std::uniform_int_distribution<int> g(1, gens), sign(0, 1);
    Word w;
    for (int k = 0; k < length; ++k) w.push(sign(rng) ? g(rng) : -g(rng));
    return w;
}

inline PureBraid random_braid(std::mt19937_64& rng, int n, int length) {
    std::uniform_int_distribution<int> s(0, n - 1), sign(0, 1);
    PureBraid b(n);
    while (static_cast<int>(b.letters.size()) < length) {
        int i = s(rng), j = s(rng);
        if (i == j) continue;
        b *= PureBraid::generator(n, std::min(i, j), std::max(i, j), sign(rng) ? 1 : -1);
    }
    return b;
}

/// sum_j (dw/dx_j)(x_j - 1) = w - 1 and the product rule, in Z[F_n].
inline Outcome fox_identities(std::uint64_t seed, int trials = 50) {
    Outcome o;
    std::mt19937_64 rng(seed);
    const int n = 4;
    const GroupRingElement one{Word()};
    for (int t = 0; t < trials; ++t) {
        Word u = random_word(rng, n, 1 + t % 9), v = random_word(rng, n, 2 + t % 7);
        GroupRingElement lhs;
        for (int j = 0; j < n; ++j) lhs += fox_derivative(u, j) * (GroupRingElement(Word::generator(j)) - one);
        if (!(lhs == GroupRingElement(u) - one)) o.fail("fundamental formula fails for " + u.str());
        for (int j = 0; j < n; ++j)
            if (!(fox_derivative(u * v, j) == fox_derivative(u, j) + GroupRingElement(u) * fox_derivative(v, j)))
                o.fail("product rule fails for " + u.str() + " * " + v.str());
    }
    return o;
}

/// Theta(b1 b2) = Theta(b1) Theta(b2), with Theta computed by Fox calculus on
/// full Artin images; the generator-product form agrees.
inline Outcome gassner_multiplicativity(std::uint64_t seed, int trials = 20) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = 3 + t % 3;
        auto b1 = random_braid(rng, n, 1 + t % 4), b2 = random_braid(rng, n, 1 + (t + 2) % 4);
        if (!(gassner_fox(b1 * b2) == gassner_fox(b1) * gassner_fox(b2))) o.fail("not multiplicative on " + b1.str() + " * " + b2.str());
        if (!(gassner(b1) == gassner_fox(b1))) o.fail("generator product differs from Fox form on " + b1.str());
    }
    return o;
}

/// Pure braids fix x_1 x_2 ... x_n and send each x_i to a conjugate of itself.
inline Outcome product_fixing(std::uint64_t seed, int trials = 40) {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = 2 + t % 5;
        auto b = random_braid(rng, n, 1 + t % 6);
        Word prod;
        for (int i = 0; i < n; ++i) prod *= Word::generator(i);
        if (artin_act(b, prod) != prod) o.fail("product not fixed by " + b.str());
        auto img = artin_images(b);
        for (int i = 0; i < n; ++i) {
            auto s = img[static_cast<std::size_t>(i)].exponent_sums(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                if (s[static_cast<std::size_t>(k)] != (k == i ? 1 : 0)) o.fail("image of x" + std::to_string(i + 1) + " is not a conjugate");
        }
        auto back = artin_images(b * b.inverse());
        for (int i = 0; i < n; ++i)
            if (back[static_cast<std::size_t>(i)] != Word::generator(i)) o.fail("b b^-1 acts nontrivially");
    }
    return o;
}

/// Torsion points exp(lambda), lambda on a resonance component, lie in V_1.
inline Outcome exp_tangent_cone(const AlexanderModel& model, const std::vector<ResonanceComponent>& comps, std::uint64_t seed,
                                int per_component = 10) {
    Outcome o;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(2, 7);
    for (const auto& c : comps) {
        int done = 0, guard = 0;
        while (done < per_component && guard++ < 200) {
            RationalVector lambda(model.n(), Rational(0));
            for (const auto& row : c.basis) {
                Rational coef(num(rng), den(rng));
                for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] += coef * row[j];
            }
            auto q = exp_character(lambda);
            if (is_identity(q)) continue;
            ++done;
            long d = model.depth(q);
            if (d < 1) o.fail(c.name() + ": depth " + std::to_string(d) + " at " + format_character(q));
        }
    }
    return o;
}

/// Depth from the braid monodromy presentation, the fibered Fox matrix and
/// the block matrix agree at random torsion characters.
inline Outcome presentation_independence(std::uint64_t seed, int count = 25) {
    Outcome o;
    auto fx = read_json_file(fixture("deleted-b3-decone.json"));
    auto arr = arrangement_from_json(fx);
    RationalVector dir{1, 0};
    AlexanderModel braid_model(arr);  // generic direction, braid monodromy presentation
    auto P = fibered_presentation(arr, dir);
    auto fox = alexander_matrix(P);
    auto block = block_alexander(P);
    // fibered generators are wires then fibers; map to line indices
    std::vector<std::size_t> line;
    for (const auto& g : P.generators) line.push_back(static_cast<std::size_t>(g.hyperplane));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    const long orders[] = {2, 3, 4, 6};
    auto corank = [](const IntLaurentMatrix& m, const Character& q) {
        return static_cast<long>(m.cols) - 1 - static_cast<long>(field_rank(evaluate_at_character(m, q)));
    };
    int positive = 0;
    for (int t = 0; t < count; ++t) {
        long M = orders[pick(rng)];
        std::uniform_int_distribution<long> k(0, M - 1);
        Character q(arr.size());
        // half the samples are 2-torsion, where depth often jumps
        for (auto& x : q) x = Rational(t % 2 ? k(rng) : k(rng) % 2, t % 2 ? M : 2);
        if (is_identity(q)) continue;
        Character qp;
        for (auto l : line) qp.push_back(q[l]);
        long a = braid_model.depth(q), b = corank(fox, qp), c = corank(block, qp);
        positive += a > 0;
        if (a != b || b != c)
            o.fail("depths " + std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c) + " at " + format_character(q));
    }
    if (o.ok) o.detail = std::to_string(positive) + " of the samples had positive depth";
    return o;
}

/// Random low-rank Laurent matrices (rational and cyclotomic): single-trial
/// finite-field rank agrees with Bareiss in >= 95% of trials; the max over
/// 5 trials agrees always.
inline Outcome rank_agreement(std::uint64_t seed, int trials = 200, int* agree_out = nullptr) {
    Outcome o;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3), expo(-1, 2), shape(2, 4), keep(0, 2);
    auto random_poly = [&](std::size_t nv) {
        IntLaurent p(nv);
        for (int k = 0; k < 2; ++k) {
            Exponent e(nv);
            for (auto& x : e) x = expo(rng);
            p.add_term(e, coef(rng));
        }
        return p;
    };
    auto random_matrix = [&](std::size_t r, std::size_t c, std::size_t nv) {
        IntLaurentMatrix m(r, c, torus_variables(nv));
        for (auto& row : m.entries)
            for (auto& e : row)
                if (keep(rng)) e = random_poly(nv);
        return m;
    };
    int agree = 0;
    for (int t = 0; t < trials; ++t) {
        std::size_t r = static_cast<std::size_t>(shape(rng)) + 1, c = static_cast<std::size_t>(shape(rng)) + 1,
                    k = static_cast<std::size_t>(shape(rng)) - 1;
        auto m = random_matrix(r, k, 2) * random_matrix(k, c, 2);
        std::size_t exact1 = 0, single = 0, multi = 0;
        if (t % 2 == 0) {
            exact1 = rank_fraction_free(m);
            single = rank_finite_field_oracle(m, seed * 1000 + static_cast<std::uint64_t>(t), 1);
            multi = rank_finite_field_oracle(m, seed * 1000 + static_cast<std::uint64_t>(t), 5);
        } else {
            long N = (t % 4 == 1) ? 3 : 4;
            std::vector<UnitAssignment> map{{Rational(1, N), {1}}, {Rational(0), {0}}};
            map[1].exponent = {-1};
            map[1].rotation = Rational(1, 2);
            auto s = substitute(m, map, {"s"});
            exact1 = rank_fraction_free(s);
            single = rank_finite_field_oracle(s, seed * 1000 + static_cast<std::uint64_t>(t), 1);
            multi = rank_finite_field_oracle(s, seed * 1000 + static_cast<std::uint64_t>(t), 5);
        }
        if (single == exact1) ++agree;
        if (multi != exact1) o.fail("5-trial oracle rank " + std::to_string(multi) + " vs exact " + std::to_string(exact1));
        if (single > exact1) o.fail("oracle rank above the generic rank");
    }
    if (agree * 100 < trials * 95) o.fail("single-trial agreement " + std::to_string(agree) + "/" + std::to_string(trials));
    if (o.ok) o.detail = std::to_string(agree) + "/" + std::to_string(trials) + " single-trial agreements";
    if (agree_out) *agree_out = agree;
    return o;
}

}  // namespace props
