#pragma once

// Multivariate Laurent polynomials with exact coefficients, matrices of them,
// substitution of units and fraction-free rank.

#include "charvar/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace charvar {

using Exponent = std::vector<int>;

template <class R>
class LaurentPoly {
public:
    using Terms = std::map<Exponent, R>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const R& c) {
        LaurentPoly p(nvars);
        if (!charvar::is_zero(c)) p.terms_.emplace(Exponent(nvars, 0), c);
        return p;
    }
    static LaurentPoly monomial(const Exponent& e, const R& c) {
        LaurentPoly p(e.size());
        if (!charvar::is_zero(c)) p.terms_.emplace(e, c);
        return p;
    }
    /// t_i^e
    static LaurentPoly variable(std::size_t nvars, std::size_t i, int e = 1) {
        Exponent x(nvars, 0);
        x.at(i) = e;
        return monomial(x, R(1));
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                  [](int v) { return v == 0; }));
    }
    R constant_term() const {
        auto it = terms_.find(Exponent(nvars_, 0));
        return it == terms_.end() ? R(0) : it->second;
    }

    void add_term(const Exponent& e, const R& c) {
        if (charvar::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second = it->second + c;
            if (charvar::is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        adopt(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        adopt(o);
        for (const auto& [e, c] : o.terms_) add_term(e, R(0) - c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, R(0) - c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(std::max(a.nvars_, b.nvars_));
        if (a.is_zero() || b.is_zero()) return r;
        a.check(b);
        Exponent e(r.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const R& c) const {
        LaurentPoly r(nvars_);
        if (charvar::is_zero(c)) return r;
        for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
        return r;
    }

    /// Multiply by the monomial t^shift.
    LaurentPoly shifted(const Exponent& shift) const {
        LaurentPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponent x = e;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += shift[i];
            r.terms_.emplace(std::move(x), c);
        }
        return r;
    }

    Exponent min_exponents() const { return bound(true); }
    Exponent max_exponents() const { return bound(false); }

    /// Sum over variables of (max - min) exponent; a size measure for pivoting.
    long degree_spread() const {
        if (is_zero()) return 0;
        auto lo = min_exponents(), hi = max_exponents();
        long s = 0;
        for (std::size_t i = 0; i < lo.size(); ++i) s += hi[i] - lo[i];
        return s;
    }

    /// Exact quotient this / g; throws std::domain_error when g does not divide.
    LaurentPoly exact_divide(const LaurentPoly& g) const {
        if (g.is_zero()) throw std::domain_error("division by zero polynomial");
        LaurentPoly q(nvars_);
        if (is_zero()) return q;
        if (g.size() == 1) {
            const auto& [ge, gc] = *g.terms_.begin();
            R inv = inverse(gc);
            for (const auto& [e, c] : terms_) {
                Exponent x = e;
                for (std::size_t i = 0; i < x.size(); ++i) x[i] -= ge[i];
                q.terms_.emplace(std::move(x), c * inv);
            }
            return q;
        }
        Exponent lo = min_exponents(), hi = max_exponents();
        Exponent glo = g.min_exponents(), ghi = g.max_exponents();
        for (std::size_t i = 0; i < lo.size(); ++i) {
            lo[i] -= glo[i];
            hi[i] -= ghi[i];
            if (lo[i] > hi[i]) throw std::domain_error("polynomial division is not exact");
        }
        const auto& [gle, glc] = *g.terms_.rbegin();
        R ginv = inverse(glc);
        LaurentPoly rem = *this;
        Exponent m(nvars_);
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = re[i] - gle[i];
                if (m[i] < lo[i] || m[i] > hi[i]) throw std::domain_error("polynomial division is not exact");
            }
            R c = rc * ginv;
            q.add_term(m, c);
            for (const auto& [ge, gc] : g.terms_) {
                Exponent x = ge;
                for (std::size_t i = 0; i < x.size(); ++i) x[i] += m[i];
                rem.add_term(x, R(0) - c * gc);
            }
        }
        return q;
    }

    template <class S, class F>
    LaurentPoly<S> map_coefficients(F&& f) const {
        LaurentPoly<S> r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = coef_string(c);
            bool mono = std::any_of(e.begin(), e.end(), [](int v) { return v != 0; });
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+ ", 1) == std::string::npos;
            if (!first) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            if (neg) cs = cs.substr(1);
            bool wrap = cs.find_first_of("+ ") != std::string::npos;
            if (!mono) os << (wrap ? "(" + cs + ")" : cs);
            else if (cs != "1") os << (wrap ? "(" + cs + ")" : cs) << "*";
            bool first_var = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << (i < names.size() ? names[i] : "t" + std::to_string(i + 1));
                if (e[i] != 1) os << "^" << (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
            }
            first = false;
        }
        return os.str();
    }

private:
    static std::string coef_string(const Rational& c) { return to_string(c); }
    static std::string coef_string(const Cyclo& c) { return c.str(); }
    template <class T>
    static std::string coef_string(const T& c) {
        std::ostringstream os;
        os << c;
        return os.str();
    }

    void adopt(const LaurentPoly& o) {
        if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
        check(o);
    }
    void check(const LaurentPoly& o) const {
        if (!is_zero() && !o.is_zero() && nvars_ != o.nvars_)
            throw std::invalid_argument("Laurent polynomials over different variable sets");
    }
    Exponent bound(bool lower) const {
        Exponent b(nvars_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = 0; i < nvars_; ++i)
                if (first || (lower ? e[i] < b[i] : e[i] > b[i])) b[i] = e[i];
            first = false;
        }
        return b;
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

using IntLaurent = LaurentPoly<Rational>;
using CycloLaurent = LaurentPoly<Cyclo>;

template <class R>
struct LaurentMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::string> variables;
    std::vector<std::vector<LaurentPoly<R>>> entries;

    LaurentMatrix() = default;
    LaurentMatrix(std::size_t r, std::size_t c, std::vector<std::string> vars)
        : rows(r), cols(c), variables(std::move(vars)),
          entries(r, std::vector<LaurentPoly<R>>(c, LaurentPoly<R>(variables.size()))) {}

    std::size_t nvars() const { return variables.size(); }
    LaurentPoly<R>& at(std::size_t i, std::size_t j) { return entries.at(i).at(j); }
    const LaurentPoly<R>& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }

    bool is_zero() const {
        for (const auto& row : entries)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }

    LaurentMatrix operator*(const LaurentMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("matrix dimensions do not match");
        LaurentMatrix r(rows, o.cols, variables);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                if (entries[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < o.cols; ++j)
                    if (!o.entries[k][j].is_zero()) r.entries[i][j] += entries[i][k] * o.entries[k][j];
            }
        return r;
    }

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }

    static LaurentMatrix identity(std::size_t n, std::vector<std::string> vars) {
        LaurentMatrix m(n, n, std::move(vars));
        for (std::size_t i = 0; i < n; ++i) m.entries[i][i] = LaurentPoly<R>::constant(m.nvars(), R(1));
        return m;
    }
};

using IntLaurentMatrix = LaurentMatrix<Rational>;
using CycloLaurentMatrix = LaurentMatrix<Cyclo>;

/// A unit value t_j -> zeta^rotation * s^exponent assigned to one variable.
struct UnitAssignment {
    Rational rotation;   // root of unity exp(2 pi i rotation)
    Exponent exponent;   // exponents in the parameters s_1..s_k
};

/// Substitutes t_j -> zeta^{q_j} s^{B_j}; coefficients live in Q(zeta_N),
/// N the lcm of the rotation denominators.
template <class R>
CycloLaurentMatrix substitute(const LaurentMatrix<R>& m, const std::vector<UnitAssignment>& map,
                              std::vector<std::string> parameters) {
    if (map.size() != m.nvars()) throw std::invalid_argument("substitution must assign every variable");
    const std::size_t k = parameters.size();
    long n = 1;
    for (const auto& a : map) {
        if (a.exponent.size() != k) throw std::invalid_argument("assignment exponent length mismatch");
        n = lcm_long(n, to_long(denom(a.rotation)));
    }
    auto root = [&](const Rational& q) { return Cyclo::from_rotation(q).embed(n); };
    CycloLaurentMatrix out(m.rows, m.cols, std::move(parameters));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            CycloLaurent acc(k);
            for (const auto& [e, c] : m.entries[i][j].terms()) {
                Rational rot = 0;
                Exponent x(k, 0);
                for (std::size_t v = 0; v < e.size(); ++v) {
                    if (e[v] == 0) continue;
                    rot += map[v].rotation * e[v];
                    for (std::size_t p = 0; p < k; ++p) x[p] += map[v].exponent[p] * e[v];
                }
                acc.add_term(x, root(rot) * Cyclo(c));
            }
            out.entries[i][j] = std::move(acc);
        }
    return out;
}

/// Evaluates at the torsion point t_j = exp(2 pi i q_j).
template <class R>
std::vector<std::vector<Cyclo>> evaluate_at_character(const LaurentMatrix<R>& m, const RationalVector& q) {
    if (q.size() != m.nvars()) throw std::invalid_argument("character length does not match variables");
    long n = 1;
    for (const auto& x : q) n = lcm_long(n, to_long(denom(x)));
    auto ctx = CycloContext::get(n);
    std::vector<long> a(q.size());
    for (std::size_t v = 0; v < q.size(); ++v) a[v] = to_long(numer(mod1(q[v]) * n));
    std::vector<std::vector<Cyclo>> out(m.rows, std::vector<Cyclo>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            RationalVector acc(static_cast<std::size_t>(ctx->degree()), Rational(0));
            Cyclo extra(0);  // cyclotomic coefficients are summed directly
            for (const auto& [e, c] : m.entries[i][j].terms()) {
                long k = 0;
                for (std::size_t v = 0; v < e.size(); ++v) k = (k + static_cast<long>(e[v]) * a[v]) % n;
                k = (k + n) % n;
                if constexpr (std::is_same_v<R, Cyclo>) {
                    extra = extra + c * Cyclo::root(k, n);
                } else {
                    const auto& p = ctx->power(k);
                    for (std::size_t r = 0; r < p.size(); ++r)
                        if (p[r] != 0) acc[r] += c * p[r];
                }
            }
            out[i][j] = Cyclo(ctx, std::move(acc)) + extra;
        }
    return out;
}

/// Rank over the fraction field by fraction-free (Bareiss) elimination with
/// full pivoting; pivot = fewest terms, then smallest degree spread.
template <class R>
std::size_t rank_fraction_free(const LaurentMatrix<R>& input) {
    auto m = input.entries;
    const std::size_t rows = input.rows, cols = input.cols;
    std::vector<std::size_t> rperm(rows), cperm(cols);
    for (std::size_t i = 0; i < rows; ++i) rperm[i] = i;
    for (std::size_t j = 0; j < cols; ++j) cperm[j] = j;
    LaurentPoly<R> prev = LaurentPoly<R>::constant(input.nvars(), R(1));
    std::size_t rank = 0;
    while (rank < rows && rank < cols) {
        std::size_t bi = rows, bj = cols, best_terms = 0;
        long best_spread = 0;
        for (std::size_t i = rank; i < rows; ++i)
            for (std::size_t j = rank; j < cols; ++j) {
                const auto& e = m[rperm[i]][cperm[j]];
                if (e.is_zero()) continue;
                std::size_t t = e.size();
                if (bi != rows && t > best_terms) continue;
                long s = e.degree_spread();
                if (bi == rows || t < best_terms || s < best_spread) {
                    bi = i;
                    bj = j;
                    best_terms = t;
                    best_spread = s;
                }
            }
        if (bi == rows) break;
        std::swap(rperm[rank], rperm[bi]);
        std::swap(cperm[rank], cperm[bj]);
        const auto piv = m[rperm[rank]][cperm[rank]];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            auto& row = m[rperm[i]];
            const auto lead = row[cperm[rank]];
            for (std::size_t j = rank + 1; j < cols; ++j) {
                auto& x = row[cperm[j]];
                const auto& y = m[rperm[rank]][cperm[j]];
                LaurentPoly<R> v = piv * x;
                if (!lead.is_zero() && !y.is_zero()) v -= lead * y;
                x = v.exact_divide(prev);
            }
            row[cperm[rank]] = LaurentPoly<R>(input.nvars());
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

}  // namespace charvar
