#pragma once

// Characters, subtorus cosets, depth of characters, resonance components,
// certification of cosets, translated-component search and poset reports.

#include "charvar/alexander.hpp"
#include "charvar/linalg.hpp"
#include "charvar/parallel.hpp"

#include <numeric>
#include <random>
#include <unordered_set>

namespace charvar {

// ---------------------------------------------------------------- characters

/// Torsion character as rotation numbers: t_j = exp(2 pi i q_j), q_j in [0, 1).
using Character = RationalVector;

inline Character normalize_character(Character q) {
    for (auto& x : q) x = mod1(x);
    return q;
}

inline Integer character_order(const Character& q) {
    Integer o = 1;
    for (const auto& x : q) o = lcm(o, denom(mod1(x)));
    return o;
}

inline bool is_identity(const Character& q) {
    return std::all_of(q.begin(), q.end(), [](const Rational& x) { return mod1(x) == 0; });
}

inline Character character_product(const Character& a, const Character& b) {
    if (a.size() != b.size()) throw std::invalid_argument("characters of different length");
    Character r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod1(a[i] + b[i]);
    return r;
}

inline Character character_power(const Character& a, long k) {
    Character r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod1(a[i] * k);
    return r;
}

/// exp(2 pi i lambda) for a rational vector.
inline Character exp_character(const RationalVector& lambda) { return normalize_character(lambda); }

inline Character parse_character(const std::string& text) {
    Character q;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        q.push_back(mod1(parse_rational(text.substr(start, comma - start))));
        start = comma + 1;
    }
    return q;
}

inline std::string format_character(const Character& q) {
    std::string s;
    for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + to_string(mod1(q[i]));
    return s;
}

// ---------------------------------------------------------------- cosets

/// rho * T: T the subtorus {t : t^a = 1 for a in L}, L saturated.
/// Canonical data: Hermite form of L and the values c = L rho mod 1.
class TorusCoset {
public:
    TorusCoset() = default;

    static TorusCoset from_lattice(std::size_t n, const IntegerMatrix& lattice, const Character& translate) {
        if (translate.size() != n) throw std::invalid_argument("translate length mismatch");
        for (const auto& row : lattice)
            if (row.size() != n) throw std::invalid_argument("lattice row length mismatch");
        TorusCoset k;
        k.n_ = n;
        k.L_ = saturate(lattice, n);
        k.finish(translate);
        return k;
    }

    /// t_j = exp(2 pi i rho_j) * prod_p s_p^{B[j][p]}; B given as n rows.
    static TorusCoset from_parametrization(std::size_t n, const IntegerMatrix& B, const Character& translate) {
        if (B.size() != n) throw std::invalid_argument("exponent matrix needs one row per coordinate");
        std::size_t k = n ? B[0].size() : 0;
        return from_lattice(n, integer_kernel(transpose(B, k), n), translate);
    }

    static TorusCoset point(const Character& q) {
        IntegerMatrix L = identity_matrix(q.size());
        return from_lattice(q.size(), L, q);
    }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return n_ - L_.size(); }
    const IntegerMatrix& lattice() const { return L_; }
    const RationalVector& values() const { return c_; }
    const Character& translate() const { return rho_; }
    /// columns of the parametrization: n x dim
    const IntegerMatrix& exponents() const { return B_; }

    bool contains(const Character& q) const {
        if (q.size() != n_) throw std::invalid_argument("character length mismatch");
        for (std::size_t i = 0; i < L_.size(); ++i) {
            Rational v = 0;
            for (std::size_t j = 0; j < n_; ++j)
                if (L_[i][j] != 0) v += q[j] * L_[i][j];
            if (mod1(v) != c_[i]) return false;
        }
        return true;
    }
    bool contains_identity() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
    }
    /// Coordinate j identically 1 on the coset.
    bool coordinate_trivial(std::size_t j) const {
        if (mod1(rho_[j]) != 0) return false;
        return std::all_of(B_[j].begin(), B_[j].end(), [](const Integer& x) { return x == 0; });
    }
    bool essential() const {
        for (std::size_t j = 0; j < n_; ++j)
            if (coordinate_trivial(j)) return false;
        return true;
    }
    /// t_1 ... t_n = 1 everywhere on the coset.
    bool satisfies_product_condition() const {
        Rational s = 0;
        for (const auto& x : rho_) s += x;
        if (mod1(s) != 0) return false;
        for (std::size_t p = 0; p < dim(); ++p) {
            Integer col = 0;
            for (std::size_t j = 0; j < n_; ++j) col += B_[j][p];
            if (col != 0) return false;
        }
        return true;
    }

    friend bool operator==(const TorusCoset& a, const TorusCoset& b) {
        return a.n_ == b.n_ && a.L_ == b.L_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TorusCoset& a, const TorusCoset& b) { return !(a == b); }
    friend bool operator<(const TorusCoset& a, const TorusCoset& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        if (a.L_ != b.L_) return a.L_ < b.L_;
        return a.c_ < b.c_;
    }

    /// Point of the coset at the parameter value s_p = exp(2 pi i k_p).
    Character sample(const RationalVector& k) const {
        Character q = rho_;
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t p = 0; p < dim(); ++p) q[j] += k[p] * B_[j][p];
        return normalize_character(q);
    }

    std::string parametrization_string() const {
        static const char* names[] = {"s", "t", "u", "v", "w"};
        std::string out = "(";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) out += ", ";
            std::string term;
            Rational r = mod1(rho_[j]);
            if (r != 0) term = r == Rational(1, 2) ? "-" : "e(" + to_string(r) + ")";
            std::string mono;
            for (std::size_t p = 0; p < dim(); ++p) {
                if (B_[j][p] == 0) continue;
                std::string v = p < 5 ? names[p] : "s" + std::to_string(p + 1);
                if (!mono.empty()) mono += "*";
                mono += v;
                if (B_[j][p] != 1) mono += "^" + (B_[j][p] < 0 ? "(" + B_[j][p].str() + ")" : B_[j][p].str());
            }
            if (mono.empty()) out += term == "-" ? "-1" : (term.empty() ? "1" : term);
            else out += (term == "-" ? "-" : (term.empty() ? "" : term + "*")) + mono;
        }
        return out + ")";
    }

private:
    void finish(const Character& translate) {
        // canonical translate: rho = V y with y_i = (U c)_i for i < rank, free coordinates 0
        c_.clear();
        for (const auto& row : L_) {
            Rational v = 0;
            for (std::size_t j = 0; j < n_; ++j) v += translate[j] * row[j];
            c_.push_back(mod1(v));
        }
        auto s = smith_normal_form(L_, n_);
        RationalVector y(n_, Rational(0));
        for (std::size_t i = 0; i < s.rank; ++i) {
            Rational uc = 0;
            for (std::size_t k = 0; k < c_.size(); ++k) uc += c_[k] * s.U[i][k];
            y[i] = uc / Rational(s.D[i][i]);
        }
        rho_.assign(n_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < n_; ++i)
                if (s.V[j][i] != 0) rho_[j] += s.V[j][i] * y[i];
        rho_ = normalize_character(rho_);
        auto K = integer_kernel(L_, n_);
        B_.assign(n_, IntegerVector(K.size(), 0));
        for (std::size_t p = 0; p < K.size(); ++p)
            for (std::size_t j = 0; j < n_; ++j) B_[j][p] = K[p][j];
    }

    std::size_t n_ = 0;
    IntegerMatrix L_;
    RationalVector c_;
    Character rho_;
    IntegerMatrix B_;
};

/// Intersection as a finite union of cosets, in canonical order.
inline std::vector<TorusCoset> coset_intersect(const TorusCoset& a, const TorusCoset& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("cosets in different tori");
    const std::size_t n = a.ambient();
    IntegerMatrix M = a.lattice();
    RationalVector c = a.values();
    M.insert(M.end(), b.lattice().begin(), b.lattice().end());
    c.insert(c.end(), b.values().begin(), b.values().end());
    auto s = smith_normal_form(M, n);
    RationalVector uc(M.size(), Rational(0));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t k = 0; k < M.size(); ++k)
            if (s.U[i][k] != 0) uc[i] += s.U[i][k] * c[k];
    for (std::size_t i = s.rank; i < M.size(); ++i)
        if (mod1(uc[i]) != 0) return {};
    IntegerMatrix Lsat = saturate(M, n);
    std::vector<long> d;
    for (std::size_t i = 0; i < s.rank; ++i) d.push_back(to_long(s.D[i][i]));
    std::set<TorusCoset> out;
    std::vector<long> k(d.size(), 0);
    while (true) {
        RationalVector y(n, Rational(0));
        for (std::size_t i = 0; i < d.size(); ++i) y[i] = (uc[i] + k[i]) / Rational(d[i]);
        Character rho(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (s.V[j][i] != 0) rho[j] += s.V[j][i] * y[i];
        out.insert(TorusCoset::from_lattice(n, Lsat, normalize_character(rho)));
        std::size_t pos = 0;
        while (pos < k.size() && ++k[pos] == d[pos]) k[pos++] = 0;
        if (pos == k.size()) break;
    }
    return {out.begin(), out.end()};
}

/// a subset of b
inline bool coset_contained(const TorusCoset& a, const TorusCoset& b) {
    auto r = coset_intersect(a, b);
    return r.size() == 1 && r[0] == a;
}

// ---------------------------------------------------------------- Alexander model

/// Presentation and Alexander matrix of an arrangement complement. Central
/// input is deconed; characters are then restricted to the decone coordinates.
class AlexanderModel {
public:
    explicit AlexanderModel(const Arrangement& arr, int decone_at = -1, std::optional<RationalVector> direction = {})
        : arr_(arr) {
        validate(arr);
        if (arr.central) {
            if (arr.ambient_dim != 3) throw InputError("central arrangements must live in dimension 3");
            auto d = decone(arr, decone_at);
            affine_ = d.affine;
            removed_ = d.removed;
            original_ = d.original;
        } else {
            if (arr.ambient_dim != 2) throw InputError("affine arrangements must live in dimension 2");
            affine_ = arr;
            for (std::size_t k = 0; k < arr.size(); ++k) original_.push_back(static_cast<int>(k));
        }
        direction_ = direction ? *direction : suggest_direction(affine_);
        presentation_ = braid_monodromy_presentation(affine_, direction_);
        matrix_ = alexander_matrix(presentation_);
    }

    const Arrangement& arrangement() const { return arr_; }
    const Arrangement& affine() const { return affine_; }
    const GroupPresentation& presentation() const { return presentation_; }
    const IntLaurentMatrix& matrix() const { return matrix_; }
    const RationalVector& direction() const { return direction_; }
    int removed() const { return removed_; }
    std::size_t n() const { return arr_.size(); }
    std::size_t generators() const { return presentation_.rank(); }

    /// Character restricted to the presentation's generators.
    Character restrict(const Character& t) const {
        if (t.size() != n()) throw InputError("character has " + std::to_string(t.size()) + " coordinates, expected " + std::to_string(n()));
        if (arr_.central) {
            Rational s = 0;
            for (const auto& x : t) s += x;
            if (mod1(s) != 0) throw InputError("character violates the product condition t_1...t_n = 1");
        }
        Character r;
        for (int k : original_) r.push_back(mod1(t[static_cast<std::size_t>(k)]));
        return r;
    }

    /// dim H^1 with coefficients in the rank-one local system t.
    long depth(const Character& t) const {
        Character r = restrict(t);
        if (is_identity(t)) return static_cast<long>(n());
        auto M = evaluate_at_character(matrix_, r);
        long rank = static_cast<long>(field_rank(std::move(M)));
        return static_cast<long>(generators()) - 1 - rank;
    }

    bool membership(const Character& t, long d) const { return depth(t) >= d; }

    /// Matrix over Q(zeta)[s^{+-1}] on the coset's parametrization.
    CycloLaurentMatrix on_coset(const TorusCoset& K) const {
        std::vector<UnitAssignment> map;
        for (int k : original_) {
            auto j = static_cast<std::size_t>(k);
            Exponent e;
            for (const auto& x : K.exponents()[j]) e.push_back(static_cast<int>(to_long(x)));
            map.push_back({K.translate()[j], e});
        }
        std::vector<std::string> params;
        for (std::size_t p = 0; p < K.dim(); ++p) params.push_back("s" + std::to_string(p + 1));
        return substitute(matrix_, map, params);
    }

private:
    Arrangement arr_, affine_;
    int removed_ = -1;
    std::vector<int> original_;
    RationalVector direction_;
    GroupPresentation presentation_;
    IntLaurentMatrix matrix_;
};

// ---------------------------------------------------------------- certification

struct Certificate {
    bool certified = false;
    long rank = 0;           // fraction-free rank on the parametrized coset
    long bound = 0;          // certified iff rank <= bound
    long generic_depth = 0;  // exact corank at the generic point
    long oracle_rank = -1;   // prime-field cross-check
    std::string parametrization;
    std::string reason;
};

inline Certificate certify_coset(const AlexanderModel& model, const TorusCoset& K, long d, std::uint64_t seed = 1,
                                 bool oracle = true, int trials = 5, std::uint64_t prime = 0) {
    Certificate c;
    c.parametrization = K.parametrization_string();
    const long m = static_cast<long>(model.generators());
    c.bound = m - 1 - d;
    if (K.ambient() != model.n()) throw InputError("coset lives in a torus of the wrong dimension");
    if (model.arrangement().central && !K.satisfies_product_condition()) {
        c.reason = "coset leaves the subtorus t_1...t_n = 1";
        c.rank = -1;
        return c;
    }
    if (K.dim() == 0 && is_identity(K.translate())) {
        c.generic_depth = static_cast<long>(model.n());
        c.certified = c.generic_depth >= d;
        c.rank = 0;
        return c;
    }
    auto M = model.on_coset(K);
    if (oracle) c.oracle_rank = static_cast<long>(rank_finite_field_oracle(M, seed, trials, prime));
    // the oracle is a cross-check only; the verdict always comes from exact elimination
    c.rank = static_cast<long>(rank_fraction_free(M));
    c.generic_depth = m - 1 - c.rank;
    c.certified = c.rank <= c.bound;
    return c;
}

/// Quick rejection: true when the oracle already proves the generic rank exceeds the bound.
inline bool oracle_rejects(const AlexanderModel& model, const TorusCoset& K, long d, std::uint64_t seed) {
    auto M = model.on_coset(K);
    long bound = static_cast<long>(model.generators()) - 1 - d;
    return static_cast<long>(rank_finite_field_oracle(M, seed, 2)) > bound;
}

// ---------------------------------------------------------------- resonance

enum class ComponentKind { Local, Partition };

struct ResonanceComponent {
    IndexSet support;
    ComponentKind kind = ComponentKind::Local;
    std::vector<IndexSet> blocks;  // the flat (local) or the partition blocks
    RationalMatrix basis;          // rows, in reduced echelon form
    std::size_t dim() const { return basis.size(); }

    std::string name() const {
        auto fmt = [](const IndexSet& s) {
            std::string out;
            for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i] + 1);
            return out;
        };
        if (kind == ComponentKind::Local) return "local(" + fmt(blocks.at(0)) + ")";
        std::string out = "partition(";
        for (std::size_t b = 0; b < blocks.size(); ++b) out += (b ? " | " : "") + fmt(blocks[b]);
        return out + ")";
    }
};

struct ResonanceOptions {
    std::vector<std::size_t> block_counts{3};
    std::size_t node_budget = 1000000;
    std::uint64_t seed = 1;
};

struct ResonanceResult {
    std::vector<ResonanceComponent> components;
    std::size_t nodes = 0;
    bool verified = true;
};

inline RationalMatrix subspace_rref(RationalMatrix rows) {
    rref(rows);
    return rows;
}

inline std::vector<ResonanceComponent> local_components(const Arrangement& arr) {
    Arrangement c = arr.central ? arr : cone(arr);
    std::vector<ResonanceComponent> out;
    const std::size_t n = c.size();
    for (const auto& I : intersection_data(c).multiple_points(3)) {
        ResonanceComponent comp;
        comp.support = I;
        comp.kind = ComponentKind::Local;
        comp.blocks = {I};
        RationalMatrix eqs;
        RationalVector sum(n, 0);
        for (int i : I) sum[static_cast<std::size_t>(i)] = 1;
        eqs.push_back(sum);
        for (std::size_t j = 0; j < n; ++j)
            if (!std::binary_search(I.begin(), I.end(), static_cast<int>(j))) {
                RationalVector e(n, 0);
                e[j] = 1;
                eqs.push_back(e);
            }
        comp.basis = subspace_rref(null_space(eqs, n));
        out.push_back(std::move(comp));
    }
    return out;
}

namespace detail {

/// Flats of the arrangement restricted to S (size >= 2), as index sets.
inline std::vector<IndexSet> restricted_flats(const std::vector<IndexSet>& flats, const IndexSet& S) {
    std::vector<IndexSet> out;
    for (const auto& f : flats) {
        IndexSet r;
        std::set_intersection(f.begin(), f.end(), S.begin(), S.end(), std::back_inserter(r));
        if (r.size() >= 2) out.push_back(r);
    }
    return out;
}

inline bool neighborly(const std::vector<IndexSet>& flats, const std::vector<int>& block_of, std::size_t blocks) {
    for (const auto& I : flats) {
        std::vector<std::size_t> count(blocks, 0);
        for (int i : I) ++count[static_cast<std::size_t>(block_of[static_cast<std::size_t>(i)])];
        for (auto c : count)
            if (c + 1 >= I.size() && c != I.size()) return false;
    }
    return true;
}

}  // namespace detail

/// Neighborly partitions of the sub-arrangement on S with the given block count.
inline std::vector<std::vector<IndexSet>> neighborly_partitions(const Arrangement& arr, const IndexSet& S,
                                                                std::size_t block_count, std::size_t* nodes = nullptr,
                                                                std::size_t budget = 1000000) {
    Arrangement c = arr.central ? arr : cone(arr);
    const std::size_t n = c.size();
    auto flats = detail::restricted_flats(intersection_data(c).flats, S);
    // double points force their lines together
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    for (const auto& I : flats)
        if (I.size() == 2) parent[static_cast<std::size_t>(find(I[0]))] = find(I[1]);
    std::vector<int> atoms;
    for (int s : S)
        if (find(s) == s) atoms.push_back(s);
    std::vector<std::vector<int>> members(n);
    for (int s : S) members[static_cast<std::size_t>(find(s))].push_back(s);

    std::vector<std::vector<IndexSet>> out;
    std::vector<int> block_of(n, -1);
    std::size_t local_nodes = 0;
    auto assign = [&](int atom, int b) {
        for (int x : members[static_cast<std::size_t>(atom)]) block_of[static_cast<std::size_t>(x)] = b;
    };
    // propagation: a block holding |I| - 1 lines of a flat I must hold all of I
    auto consistent = [&]() {
        for (const auto& I : flats) {
            std::vector<std::size_t> count(block_count, 0);
            std::size_t unassigned = 0;
            for (int i : I) {
                int b = block_of[static_cast<std::size_t>(i)];
                if (b < 0) ++unassigned;
                else ++count[static_cast<std::size_t>(b)];
            }
            std::size_t distinct = 0;
            for (auto cnt : count) distinct += cnt > 0;
            for (auto cnt : count)
                if (cnt + 1 >= I.size() && distinct > 1) return false;
            (void)unassigned;
        }
        return true;
    };
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int used) {
        if (++local_nodes + (nodes ? *nodes : 0) > budget)
            throw BudgetExceeded("neighborly partition search exceeded " + std::to_string(budget) + " nodes");
        if (k == atoms.size()) {
            if (static_cast<std::size_t>(used) != block_count) return;
            if (!detail::neighborly(flats, block_of, block_count)) return;
            std::vector<IndexSet> P(block_count);
            for (int s : S) P[static_cast<std::size_t>(block_of[static_cast<std::size_t>(s)])].push_back(s);
            out.push_back(std::move(P));
            return;
        }
        // remaining atoms must be able to open the missing blocks
        if (atoms.size() - k < block_count - static_cast<std::size_t>(used)) return;
        int atom = atoms[k];
        int limit = std::min<int>(used + 1, static_cast<int>(block_count));
        for (int b = 0; b < limit; ++b) {
            assign(atom, b);
            if (consistent()) rec(k + 1, std::max(used, b + 1));
            assign(atom, -1);
        }
    };
    rec(0, 0);
    if (nodes) *nodes += local_nodes;
    return out;
}

/// C_P, returned only when its dimension is at least 2.
inline std::optional<ResonanceComponent> partition_component(const Arrangement& arr, const IndexSet& S,
                                                             const std::vector<IndexSet>& P) {
    Arrangement c = arr.central ? arr : cone(arr);
    const std::size_t n = c.size();
    std::vector<int> block_of(n, -1);
    for (std::size_t b = 0; b < P.size(); ++b)
        for (int i : P[b]) block_of[static_cast<std::size_t>(i)] = static_cast<int>(b);
    RationalMatrix eqs;
    RationalVector sum(n, 0);
    for (int i : S) sum[static_cast<std::size_t>(i)] = 1;
    eqs.push_back(sum);
    for (std::size_t j = 0; j < n; ++j)
        if (block_of[j] < 0) {
            RationalVector e(n, 0);
            e[j] = 1;
            eqs.push_back(e);
        }
    for (const auto& I : detail::restricted_flats(intersection_data(c).flats, S)) {
        int b = block_of[static_cast<std::size_t>(I[0])];
        bool inside = std::all_of(I.begin(), I.end(), [&](int i) { return block_of[static_cast<std::size_t>(i)] == b; });
        if (inside) continue;
        RationalVector e(n, 0);
        for (int i : I) e[static_cast<std::size_t>(i)] = 1;
        eqs.push_back(e);
    }
    auto basis = subspace_rref(null_space(eqs, n));
    if (basis.size() < 2) return std::nullopt;
    ResonanceComponent comp;
    comp.support = S;
    comp.kind = ComponentKind::Partition;
    comp.blocks = P;
    comp.basis = std::move(basis);
    return comp;
}

namespace detail {

inline bool subspace_contains(const RationalMatrix& big, const RationalMatrix& small) {
    RationalMatrix m = big;
    m.insert(m.end(), small.begin(), small.end());
    return field_rank(m) == big.size();
}

/// Random integer combination of the basis rows.
inline RationalVector sample_subspace(const RationalMatrix& basis, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-7, 7);
    RationalVector v(basis.empty() ? 0 : basis[0].size(), Rational(0));
    for (const auto& row : basis) {
        int c = coef(rng);
        if (c == 0) c = 1;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += row[j] * c;
    }
    return v;
}

}  // namespace detail

/// Components of R_d: local components and partition components of
/// sub-arrangements, deduplicated and filtered by dim >= d + 1.
inline ResonanceResult resonance_components(const Arrangement& arr, long d, const ResonanceOptions& opt = {}) {
    if (d < 1) throw InputError("resonance depth must be at least 1");
    Arrangement c = arr.central ? arr : cone(arr);
    const std::size_t n = c.size();
    auto L = intersection_data(c);
    auto multiple = L.multiple_points(3);
    ResonanceResult res;
    std::vector<ResonanceComponent> found = local_components(c);

    // candidate supports: every line meets at least two multiple points of the restriction
    std::vector<IndexSet> supports;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        if (__builtin_popcountll(mask) < 4) continue;
        IndexSet S;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1ULL) S.push_back(static_cast<int>(i));
        std::vector<int> hits(n, 0);
        for (const auto& f : multiple) {
            IndexSet r;
            std::set_intersection(f.begin(), f.end(), S.begin(), S.end(), std::back_inserter(r));
            if (r.size() >= 3)
                for (int i : r) ++hits[static_cast<std::size_t>(i)];
        }
        bool ok = std::all_of(S.begin(), S.end(), [&](int i) { return hits[static_cast<std::size_t>(i)] >= 2; });
        if (ok) supports.push_back(std::move(S));
    }
    for (const auto& S : supports)
        for (auto blocks : opt.block_counts)
            for (const auto& P : neighborly_partitions(c, S, blocks, &res.nodes, opt.node_budget)) {
                auto comp = partition_component(c, S, P);
                if (!comp) continue;
                // keep only components essential on their support
                bool essential = true;
                for (int i : S) {
                    bool zero = std::all_of(comp->basis.begin(), comp->basis.end(),
                                            [&](const RationalVector& r) { return r[static_cast<std::size_t>(i)] == 0; });
                    if (zero) essential = false;
                }
                if (essential) found.push_back(std::move(*comp));
            }
    // dedupe equal subspaces, drop subspaces inside others
    std::vector<ResonanceComponent> unique;
    for (auto& comp : found) {
        bool dup = false;
        for (const auto& u : unique)
            if (u.basis == comp.basis) dup = true;
        if (!dup) unique.push_back(std::move(comp));
    }
    std::vector<ResonanceComponent> maximal;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        bool inside = false;
        for (std::size_t j = 0; j < unique.size() && !inside; ++j)
            if (i != j && unique[j].dim() > unique[i].dim() && detail::subspace_contains(unique[j].basis, unique[i].basis))
                inside = true;
        if (!inside && static_cast<long>(unique[i].dim()) >= d + 1) maximal.push_back(std::move(unique[i]));
    }
    std::sort(maximal.begin(), maximal.end(), [](const ResonanceComponent& a, const ResonanceComponent& b) {
        if (a.kind != b.kind) return a.kind == ComponentKind::Local;
        if (a.support != b.support) return a.support < b.support;
        return a.blocks < b.blocks;
    });
    // pointwise verification on samples
    auto os = os_algebra(c);
    std::mt19937_64 rng(opt.seed);
    for (const auto& comp : maximal)
        for (int trial = 0; trial < 2; ++trial)
            if (resonance_depth(os, detail::sample_subspace(comp.basis, rng)) < d) res.verified = false;
    res.components = std::move(maximal);
    return res;
}

/// exp of a rational subspace, translated by rho.
inline TorusCoset exp_coset(const RationalMatrix& basis, std::size_t n, const Character& translate) {
    IntegerMatrix ints;
    for (const auto& row : basis) ints.push_back(primitive_integer_vector(row));
    if (ints.empty()) return TorusCoset::point(translate);
    return TorusCoset::from_lattice(n, integer_kernel(ints, n), translate);
}

inline TorusCoset exp_coset(const ResonanceComponent& c, std::size_t n) {
    return exp_coset(c.basis, n, Character(n, Rational(0)));
}

// ---------------------------------------------------------------- translated components

/// A reference arrangement with a known translated component.
struct TranslatedPattern {
    std::string name;
    IntersectionData flats;
    TorusCoset coset;
};

struct SearchOptions {
    long max_order = 2;
    long d = 1;
    std::uint64_t seed = 1;
    std::size_t budget = 100000;  // candidate cosets
};

struct TranslatedResult {
    TorusCoset coset;
    IndexSet support;
    std::string pattern;
    Certificate certificate;
};

namespace detail {

/// Characters supported on S with rotations in (1/M)Z, product condition
/// respected when `central`, as representatives modulo the coset's subtorus.
inline std::vector<Character> retranslations(const TorusCoset& base, const IndexSet& S, long M, bool central,
                                             std::size_t budget) {
    const std::size_t n = base.ambient();
    std::vector<Character> reps;
    std::set<RationalVector> seen_values;
    std::vector<long> k(S.size(), 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < S.size(); ++i) {
        total *= static_cast<std::size_t>(M);
        if (total > budget * 64) throw BudgetExceeded("retranslation search space too large");
    }
    while (true) {
        Character tau(n, Rational(0));
        Rational sum = 0;
        for (std::size_t i = 0; i < S.size(); ++i) {
            tau[static_cast<std::size_t>(S[i])] = Rational(k[i], M);
            sum += Rational(k[i], M);
        }
        if (!central || mod1(sum) == 0) {
            Character t = character_product(base.translate(), tau);
            auto K = TorusCoset::from_lattice(n, base.lattice(), t);
            if (seen_values.insert(K.values()).second) {
                reps.push_back(K.translate());
                if (reps.size() > budget) throw BudgetExceeded("too many retranslated candidates");
            }
        }
        std::size_t pos = 0;
        while (pos < k.size() && ++k[pos] == M) k[pos++] = 0;
        if (pos == k.size()) break;
    }
    return reps;
}

}  // namespace detail

/// Pulls back each pattern's translated coset along every embedding of the
/// pattern, retranslates by torsion up to max_order, certifies, and keeps
/// results not contained in a component through 1.
inline std::vector<TranslatedResult> search_translated(const AlexanderModel& model,
                                                       const std::vector<TranslatedPattern>& patterns,
                                                       const std::vector<TorusCoset>& through_one,
                                                       const SearchOptions& opt = {}) {
    const auto& arr = model.arrangement();
    const std::size_t n = arr.size();
    auto L = intersection_data(arr);
    struct Candidate {
        TorusCoset coset;
        IndexSet support;
        std::string pattern;
    };
    std::vector<Candidate> candidates;
    std::set<std::pair<IntegerMatrix, RationalVector>> seen;
    for (const auto& pat : patterns) {
        const std::size_t pn = pat.flats.n;
        for (const auto& emb : find_embeddings(L, pat.flats)) {
            IntegerMatrix B(n, IntegerVector(pat.coset.dim(), 0));
            Character rho(n, Rational(0));
            for (std::size_t i = 0; i < pn; ++i) {
                B[static_cast<std::size_t>(emb[i])] = pat.coset.exponents()[i];
                rho[static_cast<std::size_t>(emb[i])] = pat.coset.translate()[i];
            }
            auto base = TorusCoset::from_parametrization(n, B, rho);
            IndexSet S(emb.begin(), emb.end());
            std::sort(S.begin(), S.end());
            for (const auto& t : detail::retranslations(base, S, opt.max_order, arr.central, opt.budget)) {
                auto K = TorusCoset::from_lattice(n, base.lattice(), t);
                if (!seen.insert({K.lattice(), K.values()}).second) continue;
                if (is_identity(K.translate()) || K.contains_identity()) continue;
                candidates.push_back({K, S, pat.name});
                if (candidates.size() > opt.budget) throw BudgetExceeded("too many translated candidates");
            }
        }
    }
    auto results = parallel_map<std::optional<TranslatedResult>>(candidates.size(), [&](std::size_t i) {
        const auto& cand = candidates[i];
        std::optional<TranslatedResult> r;
        if (model.arrangement().central && !cand.coset.satisfies_product_condition()) return r;
        if (oracle_rejects(model, cand.coset, opt.d, opt.seed + i)) return r;
        auto cert = certify_coset(model, cand.coset, opt.d, opt.seed + i, false);
        if (!cert.certified) return r;
        for (const auto& T : through_one)
            if (coset_contained(cand.coset, T)) return r;
        r = TranslatedResult{cand.coset, cand.support, cand.pattern, cert};
        return r;
    });
    std::vector<TranslatedResult> out;
    for (auto& r : results)
        if (r) out.push_back(std::move(*r));
    std::sort(out.begin(), out.end(), [](const TranslatedResult& a, const TranslatedResult& b) {
        if (a.support != b.support) return a.support < b.support;
        return a.coset < b.coset;
    });
    return out;
}

// ---------------------------------------------------------------- points

struct PointReport {
    Character point;
    long depth = 0;
    long claimed = 0;
    bool holds = false;
};

inline PointReport verify_point(const AlexanderModel& model, const Character& t, long claimed) {
    PointReport r{normalize_character(t), model.depth(t), claimed, false};
    r.holds = r.depth >= claimed;
    return r;
}

/// Subgroup generated by the given characters plus the order-dividing-M
/// points of each coset (cosets whose translate order divides M).
inline std::vector<Character> scan_search_set(std::size_t n, const std::vector<Character>& generators,
                                              const std::vector<TorusCoset>& cosets, long M, std::size_t budget) {
    std::vector<Character> gens = generators;
    for (const auto& K : cosets) {
        if (K.ambient() != n) throw InputError("coset in a torus of the wrong dimension");
        if (M <= 0) break;
        Integer o = character_order(K.translate());
        if (Integer(M) % o != 0) continue;
        gens.push_back(K.translate());
        for (std::size_t p = 0; p < K.dim(); ++p) {
            RationalVector k(K.dim(), Rational(0));
            k[p] = Rational(1, M);
            Character step = K.sample(k);
            gens.push_back(character_product(step, character_power(K.translate(), -1)));
        }
    }
    std::set<Character> group{Character(n, Rational(0))};
    std::vector<Character> frontier{Character(n, Rational(0))};
    while (!frontier.empty()) {
        std::vector<Character> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                auto x = character_product(g, normalize_character(h));
                if (group.insert(x).second) {
                    if (group.size() > budget)
                        throw BudgetExceeded("scan search set exceeds " + std::to_string(budget) + " characters");
                    next.push_back(x);
                }
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

inline std::vector<Character> scan_points(const AlexanderModel& model, const std::vector<Character>& search_set, long d) {
    auto depths = parallel_map<long>(search_set.size(), [&](std::size_t i) {
        const auto& t = search_set[i];
        if (model.arrangement().central) {
            Rational s = 0;
            for (const auto& x : t) s += x;
            if (mod1(s) != 0) return -1L;
        }
        return model.depth(t);
    });
    std::vector<Character> out;
    for (std::size_t i = 0; i < search_set.size(); ++i)
        if (depths[i] >= d) out.push_back(search_set[i]);
    return out;
}

// ---------------------------------------------------------------- report

struct ReportNode {
    std::string id;
    TorusCoset coset;
    long depth = 0;
    bool essential = false;
    std::string provenance;
};

struct ReportEdge {
    std::vector<std::string> members;
    Character point;
    long depth = 0;
};

struct PosetReport {
    std::vector<ReportNode> nodes;
    std::vector<ReportEdge> edges;
    std::map<std::string, std::size_t> totals;
};

struct ComponentInput {
    std::string id;
    TorusCoset coset;
    std::string provenance;
};

/// Components with generic depth, essentiality and their intersection points
/// other than 1, each with the set of components through it.
inline PosetReport char_poset_report(const AlexanderModel& model, const std::vector<ComponentInput>& components) {
    PosetReport rep;
    rep.nodes = parallel_map<ReportNode>(components.size(), [&](std::size_t i) {
        const auto& c = components[i];
        ReportNode node{c.id, c.coset, 0, c.coset.essential(), c.provenance};
        if (c.coset.dim() == 0) node.depth = model.depth(c.coset.translate());
        else node.depth = certify_coset(model, c.coset, 0, 1, false).generic_depth;
        return node;
    });
    std::map<Character, std::set<std::size_t>> points;
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j)
            for (const auto& K : coset_intersect(components[i].coset, components[j].coset)) {
                if (K.dim() != 0 || is_identity(K.translate())) continue;
                points[K.translate()].insert(i);
                points[K.translate()].insert(j);
            }
    for (auto& [pt, members] : points) {
        // every component through the point, not only the pairs found
        for (std::size_t k = 0; k < components.size(); ++k)
            if (components[k].coset.contains(pt)) members.insert(k);
        ReportEdge e;
        for (auto k : members) e.members.push_back(components[k].id);
        e.point = pt;
        e.depth = model.depth(pt);
        rep.edges.push_back(std::move(e));
    }
    std::sort(rep.edges.begin(), rep.edges.end(), [](const ReportEdge& a, const ReportEdge& b) {
        if (a.depth != b.depth) return a.depth > b.depth;
        return a.point < b.point;
    });
    rep.totals["components"] = rep.nodes.size();
    std::size_t through_one = 0, translated = 0, isolated = 0;
    for (const auto& nd : rep.nodes) {
        if (nd.coset.dim() == 0) ++isolated;
        else if (nd.coset.contains_identity()) ++through_one;
        else ++translated;
    }
    rep.totals["through_identity"] = through_one;
    rep.totals["translated"] = translated;
    rep.totals["isolated_points"] = isolated;
    rep.totals["intersection_points"] = rep.edges.size();
    return rep;
}

}  // namespace charvar
