#pragma once

// Fox calculus, Alexander matrices (Fox and block form), the Gassner
// representation and the Orlik-Solomon algebra up to degree 2.

#include "charvar/braid.hpp"
#include "charvar/laurent.hpp"

namespace charvar {

/// Formal integer combination of free-group words.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(const Word& w, const Rational& c = 1) { add(w, c); }

    void add(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        for (const auto& [w, c] : b.terms_) a.add(w, -c);
        return a;
    }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement r;
        for (const auto& [u, c] : a.terms_)
            for (const auto& [v, d] : b.terms_) r.add(u * v, c * d);
        return r;
    }
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ == b.terms_; }

    /// Image in Z[t^{+-1}] sending x_g to t_{var[g]}.
    IntLaurent abelianize(std::size_t nvars, const std::vector<int>& var = {}) const {
        IntLaurent p(nvars);
        for (const auto& [w, c] : terms_) {
            Exponent e(nvars, 0);
            for (int l : w.letters()) {
                auto g = static_cast<std::size_t>(std::abs(l) - 1);
                auto v = var.empty() ? g : static_cast<std::size_t>(var.at(g));
                e.at(v) += l > 0 ? 1 : -1;
            }
            p.add_term(e, c);
        }
        return p;
    }

private:
    std::map<Word, Rational> terms_;
};

/// Fox derivative d w / d x_j.
inline GroupRingElement fox_derivative(const Word& w, int j) {
    if (j < 0) throw std::out_of_range("generator index out of range");
    GroupRingElement d;
    Word prefix;
    for (int l : w.letters()) {
        if (l == j + 1) d.add(prefix, 1);
        prefix.push(l);
        if (l == -(j + 1)) d.add(prefix, -1);  // -prefix x_j^{-1}
    }
    return d;
}

/// Abelianized Fox derivatives of w with respect to every generator, in one pass.
inline std::vector<IntLaurent> abelian_fox_row(const Word& w, std::size_t n) {
    std::vector<IntLaurent> row(n, IntLaurent(n));
    Exponent e(n, 0);
    for (int l : w.letters()) {
        auto g = static_cast<std::size_t>(std::abs(l) - 1);
        if (g >= n) throw std::out_of_range("relator uses a generator beyond the presentation");
        if (l > 0) {
            row[g].add_term(e, 1);
            e[g] += 1;
        } else {
            e[g] -= 1;
            row[g].add_term(e, -1);
        }
    }
    return row;
}

inline std::vector<std::string> torus_variables(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("t" + std::to_string(i + 1));
    return v;
}

/// (d r_i / d x_j)^{ab}; variable t_j is the image of the j-th generator.
inline IntLaurentMatrix alexander_matrix(const GroupPresentation& P) {
    const std::size_t m = P.rank();
    IntLaurentMatrix A(P.relators.size(), m, torus_variables(m));
    for (std::size_t i = 0; i < P.relators.size(); ++i) A.entries[i] = abelian_fox_row(P.relators[i], m);
    return A;
}

/// Gassner matrix of one generator A_{i,j}^{+-1} on n strands.
inline IntLaurentMatrix gassner_generator(int n, const BraidLetter& a) {
    auto img = artin_generator_images(n, a);
    IntLaurentMatrix G(static_cast<std::size_t>(n), static_cast<std::size_t>(n), torus_variables(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) G.entries[static_cast<std::size_t>(i)] = abelian_fox_row(img[static_cast<std::size_t>(i)], static_cast<std::size_t>(n));
    return G;
}

/// Theta(b)_{ik} = (d b(x_i) / d x_k)^{ab}, multiplicative: Theta(b1 b2) = Theta(b1) Theta(b2).
inline IntLaurentMatrix gassner(const PureBraid& b) {
    auto G = IntLaurentMatrix::identity(static_cast<std::size_t>(b.n), torus_variables(static_cast<std::size_t>(b.n)));
    for (const auto& letter : b.letters) G = G * gassner_generator(b.n, letter);
    return G;
}

/// The same matrix via Fox calculus on the full Artin images.
inline IntLaurentMatrix gassner_fox(const PureBraid& b) {
    auto img = artin_images(b);
    const auto n = static_cast<std::size_t>(b.n);
    IntLaurentMatrix G(n, n, torus_variables(n));
    for (std::size_t i = 0; i < n; ++i) G.entries[i] = abelian_fox_row(img[i], n);
    return G;
}

/// Block matrix [id - t_{n+j} Theta(abar_j) | d_1 in block column j].
inline IntLaurentMatrix block_alexander(const GroupPresentation& P) {
    if (P.kind != PresentationKind::Fibered) throw std::invalid_argument("block form needs a fibered presentation");
    const std::size_t n = P.wires, r = P.fiber_monodromy.size(), m = n + r;
    IntLaurentMatrix A(n * r, m, torus_variables(m));
    for (std::size_t j = 0; j < r; ++j) {
        auto theta = gassner(P.fiber_monodromy[j]);
        auto ty = IntLaurent::variable(m, n + j);
        for (std::size_t i = 0; i < n; ++i) {
            auto& row = A.entries[j * n + i];
            for (std::size_t k = 0; k < n; ++k) {
                IntLaurent th(m);
                for (const auto& [e, c] : theta.entries[i][k].terms()) {
                    Exponent x(m, 0);
                    std::copy(e.begin(), e.end(), x.begin());
                    th.add_term(x, c);
                }
                row[k] = (i == k ? IntLaurent::constant(m, 1) : IntLaurent(m)) - ty * th;
            }
            row[n + j] = IntLaurent::variable(m, i) - IntLaurent::constant(m, 1);
        }
    }
    return A;
}

// ---------------------------------------------------------------- Orlik-Solomon

struct OSAlgebra {
    std::size_t n = 0;
    std::vector<IndexSet> flats;                  // rank-2 flats, all sizes
    std::vector<std::vector<int>> flat_of_pair;   // -1 on the diagonal
    std::vector<std::size_t> offset;              // first A^2 basis index of each flat
    std::size_t dim2 = 0;

    /// Index of a_{i_1} ^ a_{i_k} in the degree-2 basis (k >= 2).
    std::size_t basis_index(std::size_t flat, int line) const {
        const auto& f = flats[flat];
        auto it = std::find(f.begin(), f.end(), line);
        return offset[flat] + static_cast<std::size_t>(it - f.begin()) - 1;
    }

    /// a_p ^ a_q in the basis, as (index, coefficient) pairs.
    std::vector<std::pair<std::size_t, int>> wedge(int p, int q) const {
        if (p == q) return {};
        auto f = static_cast<std::size_t>(flat_of_pair[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
        int anchor = flats[f].front();
        if (p == anchor) return {{basis_index(f, q), 1}};
        if (q == anchor) return {{basis_index(f, p), -1}};
        return {{basis_index(f, q), 1}, {basis_index(f, p), -1}};
    }
};

inline OSAlgebra os_algebra(const Arrangement& arr) {
    Arrangement c = arr.central ? arr : cone(arr);
    auto L = intersection_data(c);
    OSAlgebra os;
    os.n = c.size();
    os.flats = L.flats;
    os.flat_of_pair.assign(os.n, std::vector<int>(os.n, -1));
    for (std::size_t f = 0; f < os.flats.size(); ++f) {
        os.offset.push_back(os.dim2);
        os.dim2 += os.flats[f].size() - 1;
        for (int a : os.flats[f])
            for (int b : os.flats[f])
                if (a != b) os.flat_of_pair[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(f);
    }
    return os;
}

/// Matrix of x -> lambda ^ x from A^1 to A^2.
inline RationalMatrix os_multiplication_matrix(const OSAlgebra& os, const RationalVector& lambda) {
    if (lambda.size() != os.n) throw std::invalid_argument("lambda length does not match the arrangement");
    RationalMatrix M(os.dim2, RationalVector(os.n, Rational(0)));
    for (std::size_t q = 0; q < os.n; ++q)
        for (std::size_t p = 0; p < os.n; ++p) {
            if (lambda[p] == 0 || p == q) continue;
            for (auto [idx, c] : os.wedge(static_cast<int>(p), static_cast<int>(q))) M[idx][q] += lambda[p] * c;
        }
    return M;
}

/// dim H^1(A, lambda) = dim ker(mu_lambda) - 1 for lambda != 0; n for lambda = 0.
inline long resonance_depth(const OSAlgebra& os, const RationalVector& lambda) {
    if (lambda.size() != os.n) throw std::invalid_argument("lambda length does not match the arrangement");
    bool zero = std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x == 0; });
    if (zero) return static_cast<long>(os.n);
    auto M = os_multiplication_matrix(os, lambda);
    return static_cast<long>(os.n - field_rank(std::move(M))) - 1;
}

}  // namespace charvar
