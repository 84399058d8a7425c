#pragma once

// Exact integer and rational scalars shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Raised for malformed user input (files, command-line values).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a configurable enumeration budget is exhausted.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

// floor(a / b) for b != 0
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor(const Rational& r) { return floor_div(numer(r), denom(r)); }

/// Representative of r modulo 1 in [0, 1).
inline Rational mod1(const Rational& r) { return r - Rational(floor(r)); }

inline long to_long(const Integer& v) {
    if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
        throw std::overflow_error("integer does not fit in a machine word");
    return v.convert_to<long>();
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

/// Parses "p", "-p" or "p/q" (no floating point, no whitespace inside).
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        if (s.empty()) throw InputError("empty number");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw InputError("bad number: " + std::string(text));
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw InputError("not a rational number: " + std::string(text));
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer p = parse_int(text.substr(0, slash));
    Integer q = parse_int(text.substr(slash + 1));
    if (q == 0) throw InputError("zero denominator in " + std::string(text));
    return Rational(p, q);
}

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerVector>;
using RationalMatrix = std::vector<RationalVector>;

inline Integer common_denominator(const RationalVector& v) {
    Integer d = 1;
    for (const auto& x : v) d = lcm(d, denom(x));
    return d;
}

/// Euler's totient.
inline long totient(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace charvar
