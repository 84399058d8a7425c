#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), elements stored as
// rational polynomials of degree < phi(N) reduced modulo Phi_N.

#include "charvar/numeric.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace charvar {

class CycloContext {
public:
    long order() const { return order_; }
    long degree() const { return static_cast<long>(modulus_.size()) - 1; }
    /// Coefficients of Phi_N, constant term first; monic.
    const IntegerVector& modulus() const { return modulus_; }
    /// zeta^j reduced, for 0 <= j < N.
    const IntegerVector& power(long j) const { return powers_[static_cast<std::size_t>(j)]; }

    static std::shared_ptr<const CycloContext> get(long n) {
        if (n < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
        static std::mutex mutex;
        static std::map<long, std::shared_ptr<const CycloContext>> cache;
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(n));
        cache.emplace(n, ctx);
        return ctx;
    }

    static IntegerVector cyclotomic_polynomial(long n) {
        // x^n - 1 divided by Phi_d for every proper divisor d
        IntegerVector num(static_cast<std::size_t>(n) + 1, 0);
        num[0] = -1;
        num[static_cast<std::size_t>(n)] = 1;
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            num = divide_monic(num, cyclotomic_polynomial(d));
        }
        return num;
    }

    template <class Coef>
    std::vector<Coef> reduce(std::vector<Coef> poly) const {
        const long deg = degree();
        for (long k = static_cast<long>(poly.size()) - 1; k >= deg; --k) {
            Coef lead = poly[static_cast<std::size_t>(k)];
            if (lead == 0) continue;
            for (long i = 0; i < deg; ++i)
                poly[static_cast<std::size_t>(k - deg + i)] -= lead * Coef(modulus_[static_cast<std::size_t>(i)]);
            poly[static_cast<std::size_t>(k)] = 0;
        }
        poly.resize(static_cast<std::size_t>(deg), Coef(0));
        return poly;
    }

private:
    explicit CycloContext(long n) : order_(n), modulus_(cyclotomic_polynomial(n)) {
        powers_.reserve(static_cast<std::size_t>(n));
        for (long j = 0; j < n; ++j) {
            IntegerVector x(static_cast<std::size_t>(j) + 1, 0);
            x[static_cast<std::size_t>(j)] = 1;
            powers_.push_back(reduce(std::move(x)));
        }
    }

    static IntegerVector divide_monic(const IntegerVector& num, const IntegerVector& den) {
        IntegerVector rem = num;
        const std::size_t dd = den.size() - 1;
        IntegerVector quot(num.size() - dd, 0);
        for (std::size_t k = num.size() - 1; k + 1 > dd && k >= dd; --k) {
            Integer lead = rem[k];
            quot[k - dd] = lead;
            if (lead != 0)
                for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= lead * den[i];
            if (k == dd) break;
        }
        while (quot.size() > 1 && quot.back() == 0) quot.pop_back();
        return quot;
    }

    long order_;
    IntegerVector modulus_;
    std::vector<IntegerVector> powers_;
};

/// Element of Q(zeta_N). Binary operations on elements of different
/// conductors lift both operands to the lcm conductor.
class Cyclo {
public:
    Cyclo() : Cyclo(Rational(0)) {}
    Cyclo(long v) : Cyclo(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Cyclo(const Integer& v) : Cyclo(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Cyclo(const Rational& v) : ctx_(CycloContext::get(1)), c_{v} {}  // NOLINT(google-explicit-constructor)

    Cyclo(std::shared_ptr<const CycloContext> ctx, RationalVector coefficients)
        : ctx_(std::move(ctx)), c_(std::move(coefficients)) {
        c_.resize(static_cast<std::size_t>(ctx_->degree()), Rational(0));
    }

    /// zeta_N^k
    static Cyclo root(long k, long n) {
        auto ctx = CycloContext::get(n);
        long e = ((k % n) + n) % n;
        const auto& p = ctx->power(e);
        RationalVector c(p.begin(), p.end());
        return Cyclo(ctx, std::move(c)).normalized();
    }

    /// exp(2 pi i q) for rational q.
    static Cyclo from_rotation(const Rational& q) {
        Rational r = mod1(q);
        return root(to_long(numer(r)), to_long(denom(r)));
    }

    long conductor() const { return ctx_->order(); }
    const RationalVector& coefficients() const { return c_; }
    const CycloContext& context() const { return *ctx_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Cyclo embed(long m) const {
        if (m % conductor() != 0) throw std::invalid_argument("embedding requires N | M");
        if (m == conductor()) return *this;
        const long step = m / conductor();
        auto target = CycloContext::get(m);
        RationalVector acc(static_cast<std::size_t>(target->degree()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& p = target->power((static_cast<long>(i) * step) % m);
            for (std::size_t k = 0; k < p.size(); ++k)
                if (p[k] != 0) acc[k] += c_[i] * p[k];
        }
        return Cyclo(target, std::move(acc));
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) { return combine(a, b, +1); }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return combine(a, b, -1); }
    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        if (a.conductor() != b.conductor()) {
            long m = lcm_long(a.conductor(), b.conductor());
            return a.embed(m) * b.embed(m);
        }
        if (a.c_.size() == 1) return Cyclo(a.ctx_, {a.c_[0] * b.c_[0]});
        std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return Cyclo(a.ctx_, a.ctx_->reduce(std::move(prod)));
    }

    Cyclo inverse() const;

    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    Cyclo pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclo result(Rational(1)), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (a.conductor() != b.conductor()) {
            long m = lcm_long(a.conductor(), b.conductor());
            return a.embed(m).c_ == b.embed(m).c_;
        }
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
                os << to_string(c_[i]);
            } else {
                if (c_[i] != 1) os << to_string(c_[i]) << "*";
                os << "z" << conductor();
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.str(); }

private:
    // Q(zeta_2) = Q; keep a single representation for rationals.
    Cyclo normalized() const {
        if (conductor() == 2) return Cyclo(c_[0]);
        return *this;
    }

    static Cyclo combine(const Cyclo& a, const Cyclo& b, int sign) {
        if (a.conductor() != b.conductor()) {
            long m = lcm_long(a.conductor(), b.conductor());
            return combine(a.embed(m), b.embed(m), sign);
        }
        Cyclo r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (b.c_[i] == 0) continue;
            if (sign > 0)
                r.c_[i] += b.c_[i];
            else
                r.c_[i] -= b.c_[i];
        }
        return r;
    }

    std::shared_ptr<const CycloContext> ctx_;
    RationalVector c_;
};

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x == 0; }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline Cyclo inverse(const Cyclo& x) { return x.inverse(); }

/// Rank of a dense matrix over a field by Gaussian elimination.
template <class F>
std::size_t field_rank(std::vector<std::vector<F>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!is_zero(m[r][col])) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        F inv = inverse(m[rank][col]);
        for (std::size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (is_zero(m[r][col])) continue;
            F f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!is_zero(m[rank][c])) m[r][c] = m[r][c] - f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Reduced row echelon form over a field; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(std::vector<std::vector<F>>& m) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!is_zero(m[r][col])) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        F inv = inverse(m[rank][col]);
        for (std::size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || is_zero(m[r][col])) continue;
            F f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!is_zero(m[rank][c])) m[r][c] = m[r][c] - f * m[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

/// Basis of the right null space {v : m v = 0} over a field.
template <class F>
std::vector<std::vector<F>> null_space(std::vector<std::vector<F>> m, std::size_t cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(0) - m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
    if (c_.size() == 1) return Cyclo(ctx_, {Rational(1) / c_[0]});
    // Solve (multiplication by *this) x = 1.
    const std::size_t d = c_.size();
    std::vector<RationalVector> m(d, RationalVector(d + 1, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
        RationalVector basis(d, Rational(0));
        basis[j] = 1;
        Cyclo col = *this * Cyclo(ctx_, basis);
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
    }
    m[0][d] = 1;
    auto pivots = rref(m);
    RationalVector x(d, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][d];
    return Cyclo(ctx_, std::move(x));
}

}  // namespace charvar
