#pragma once

// Integer lattices (Hermite / Smith normal forms, kernels, saturation) and
// the prime-field rank oracle.

#include "charvar/laurent.hpp"

#include <random>
#include <tuple>

namespace charvar {

// ---------------------------------------------------------------- integers

inline IntegerMatrix identity_matrix(std::size_t n) {
    IntegerMatrix m(n, IntegerVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b, std::size_t bcols) {
    IntegerMatrix r(a.size(), IntegerVector(bcols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < bcols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline IntegerMatrix transpose(const IntegerMatrix& a, std::size_t cols) {
    IntegerMatrix t(cols, IntegerVector(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

struct SmithForm {
    IntegerMatrix U, D, V;  // U * B * V = D
    std::size_t rank = 0;
    IntegerVector diagonal() const {
        IntegerVector d;
        for (std::size_t i = 0; i < rank; ++i) d.push_back(D[i][i]);
        return d;
    }
};

/// Smith normal form of an r x c integer matrix (c given for r = 0).
inline SmithForm smith_normal_form(const IntegerMatrix& b, std::size_t cols) {
    const std::size_t rows = b.size();
    SmithForm s{identity_matrix(rows), b, identity_matrix(cols), 0};
    auto& D = s.D;
    auto row_op = [&](std::size_t target, std::size_t src, const Integer& f) {  // row_t -= f row_s
        for (std::size_t j = 0; j < cols; ++j) D[target][j] -= f * D[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.U[target][j] -= f * s.U[src][j];
    };
    auto col_op = [&](std::size_t target, std::size_t src, const Integer& f) {  // col_t -= f col_s
        for (std::size_t i = 0; i < rows; ++i) D[i][target] -= f * D[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.V[i][target] -= f * s.V[i][src];
    };
    auto swap_rows = [&](std::size_t a, std::size_t c) {
        std::swap(D[a], D[c]);
        std::swap(s.U[a], s.U[c]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t c) {
        for (auto& r : D) std::swap(r[a], r[c]);
        for (auto& r : s.V) std::swap(r[a], r[c]);
    };
    auto negate_row = [&](std::size_t a) {
        for (auto& x : D[a]) x = -x;
        for (auto& x : s.U[a]) x = -x;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry of the remaining block as pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D[i][j] != 0 && (pi == rows || abs(D[i][j]) < abs(D[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D[i][t] == 0) continue;
                row_op(i, t, floor_div(D[i][t], D[t][t]));
                if (D[i][t] != 0) {
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D[t][j] == 0) continue;
                col_op(j, t, floor_div(D[t][j], D[t][t]));
                if (D[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: pivot must divide the rest of the block
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        for (std::size_t k = 0; k < cols; ++k) D[t][k] += D[i][k];
                        for (std::size_t k = 0; k < rows; ++k) s.U[t][k] += s.U[i][k];
                        clean = false;
                        break;
                    }
        }
        if (D[t][t] < 0) negate_row(t);
        ++t;
    }
    s.rank = t;
    return s;
}

/// Row-style Hermite normal form: nonzero rows only, positive pivots,
/// entries above each pivot reduced into [0, pivot).
inline IntegerMatrix hermite_normal_form(IntegerMatrix m, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        // Euclid on column c among rows r..end
        while (true) {
            std::size_t piv = m.size();
            for (std::size_t i = r; i < m.size(); ++i)
                if (m[i][c] != 0 && (piv == m.size() || abs(m[i][c]) < abs(m[piv][c]))) piv = i;
            if (piv == m.size()) break;
            std::swap(m[r], m[piv]);
            bool done = true;
            for (std::size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                Integer f = floor_div(m[i][c], m[r][c]);
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
                if (m[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r >= m.size() || m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (auto& x : m[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Integer f = floor_div(m[i][c], m[r][c]);
            if (f != 0)
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

/// Basis (as rows) of {x in Z^cols : m x = 0}.
inline IntegerMatrix integer_kernel(const IntegerMatrix& m, std::size_t cols) {
    auto s = smith_normal_form(m, cols);
    IntegerMatrix basis;
    for (std::size_t j = s.rank; j < cols; ++j) {
        IntegerVector v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = s.V[i][j];
        basis.push_back(std::move(v));
    }
    return hermite_normal_form(basis, cols);
}

/// Saturation of the row lattice of m: all integer vectors in its Q-span.
inline IntegerMatrix saturate(const IntegerMatrix& m, std::size_t cols) {
    return integer_kernel(integer_kernel(m, cols), cols);
}

inline std::size_t integer_rank(const IntegerMatrix& m, std::size_t cols) {
    return hermite_normal_form(m, cols).size();
}

/// Integer multiple of a rational vector with coprime entries.
inline IntegerVector primitive_integer_vector(const RationalVector& v) {
    Integer d = common_denominator(v);
    IntegerVector out;
    Integer g = 0;
    for (const auto& x : v) {
        out.push_back(numer(x * d));
        g = gcd(g, out.back());
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

// ---------------------------------------------------------------- prime field

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Smallest prime p > 2^30 with p = 1 mod n.
inline std::uint64_t default_oracle_prime(long n) {
    const std::uint64_t base = (1ULL << 30) + 1;
    std::uint64_t p = base + (static_cast<std::uint64_t>(n) - (base - 1) % static_cast<std::uint64_t>(n)) %
                                 static_cast<std::uint64_t>(n);
    while (!is_prime(p)) p += static_cast<std::uint64_t>(n);
    return p;
}

/// An element of exact multiplicative order n modulo p.
inline std::uint64_t root_of_unity_mod(long n, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("oracle modulus is not prime");
    if ((p - 1) % static_cast<std::uint64_t>(n) != 0)
        throw std::invalid_argument("no element of order " + std::to_string(n) + " modulo " + std::to_string(p));
    auto factors = prime_factors(n);
    for (std::uint64_t h = 2; h < p; ++h) {
        std::uint64_t g = powmod(h, (p - 1) / static_cast<std::uint64_t>(n), p);
        bool ok = true;
        for (long q : factors)
            if (powmod(g, static_cast<std::uint64_t>(n / q), p) == 1) ok = false;
        if (ok) return g;
    }
    throw std::invalid_argument("no element of the requested order");
}

inline std::uint64_t rational_mod(const Rational& r, std::uint64_t p) {
    Integer P(p);
    Integer a = numer(r) % P;
    if (a < 0) a += P;
    Integer b = denom(r) % P;
    if (b == 0) throw std::domain_error("denominator vanishes modulo the oracle prime");
    auto av = a.convert_to<std::uint64_t>(), bv = b.convert_to<std::uint64_t>();
    return mulmod(av, powmod(bv, p - 2, p), p);
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        std::uint64_t inv = powmod(m[rank][c], p - 2, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (!m[i][c]) continue;
            std::uint64_t f = mulmod(m[i][c], inv, p);
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + p - mulmod(f, m[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

inline std::uint64_t coefficient_mod(const Rational& c, std::uint64_t p, std::uint64_t) { return rational_mod(c, p); }

/// Image of a cyclotomic number under zeta_N -> omega^(M/N); omega has order M.
inline std::uint64_t coefficient_mod(const Cyclo& c, std::uint64_t p, std::uint64_t zeta) {
    std::uint64_t acc = 0, pw = 1;
    for (const auto& x : c.coefficients()) {
        if (x != 0) acc = (acc + mulmod(rational_mod(x, p), pw, p)) % p;
        pw = mulmod(pw, zeta, p);
    }
    return acc;
}

/// Rank modulo p after assigning the prime-field values to the variables.
/// zeta_of_conductor(N) supplies the image of zeta_N for cyclotomic entries.
template <class R, class ZetaFn>
std::size_t rank_finite_field(const LaurentMatrix<R>& m, std::uint64_t p, const std::vector<std::uint64_t>& values,
                              ZetaFn&& zeta_of_conductor) {
    if (values.size() != m.nvars()) throw std::invalid_argument("assignment length mismatch");
    std::vector<std::uint64_t> inv(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (values[v] % p == 0) throw std::invalid_argument("assigned values must be nonzero");
        inv[v] = powmod(values[v], p - 2, p);
    }
    std::vector<std::vector<std::uint64_t>> ev(m.rows, std::vector<std::uint64_t>(m.cols, 0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            std::uint64_t acc = 0;
            for (const auto& [e, c] : m.entries[i][j].terms()) {
                std::uint64_t zeta = 1;
                if constexpr (std::is_same_v<R, Cyclo>) zeta = zeta_of_conductor(c.conductor());
                std::uint64_t term = coefficient_mod(c, p, zeta);
                for (std::size_t v = 0; v < e.size(); ++v) {
                    if (e[v] > 0) term = mulmod(term, powmod(values[v], static_cast<std::uint64_t>(e[v]), p), p);
                    if (e[v] < 0) term = mulmod(term, powmod(inv[v], static_cast<std::uint64_t>(-e[v]), p), p);
                }
                acc = (acc + term) % p;
            }
            ev[i][j] = acc;
        }
    return rank_mod_p(std::move(ev), p);
}

/// Randomized generic rank: max over trials of the rank at random nonzero
/// values; cyclotomic coefficients use an element of exact order N mod p.
template <class R>
std::size_t rank_finite_field_oracle(const LaurentMatrix<R>& m, std::uint64_t seed, int trials = 5,
                                     std::uint64_t prime = 0) {
    long conductor = 1;
    if constexpr (std::is_same_v<R, Cyclo>)
        for (const auto& row : m.entries)
            for (const auto& e : row)
                for (const auto& [x, c] : e.terms()) conductor = lcm_long(conductor, c.conductor());
    std::uint64_t p = prime ? prime : default_oracle_prime(conductor);
    std::uint64_t omega = root_of_unity_mod(conductor, p);
    auto zeta = [&](long n) { return powmod(omega, static_cast<std::uint64_t>(conductor / n), p); };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
    std::size_t best = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<std::uint64_t> vals(m.nvars());
        for (auto& v : vals) v = dist(rng);
        best = std::max(best, rank_finite_field(m, p, vals, zeta));
    }
    return best;
}

}  // namespace charvar
