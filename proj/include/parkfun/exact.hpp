#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace parkfun {

// All counts and series coefficients are exact; never floats.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

// Enumeration jobs refuse to start when s^n exceeds the budget.
struct BudgetError : std::runtime_error {
    ExactInt required;
    explicit BudgetError(ExactInt req)
        : std::runtime_error("enumeration budget exceeded: would simulate " + req.str() +
                             " sequences"),
          required(std::move(req)) {}
};

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline ExactInt ipow(ExactInt base, unsigned long exp) {
    ExactInt r = 1;
    while (exp) {
        if (exp & 1)
            r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

/* Integer power with the conventions 0^0 = 1 and 1^{-1} = 1 (the counting
   formulas silently require both, e.g. (r+1)^{r-1} at r = 0). Negative
   exponents are only legal for base +-1. */
inline ExactInt pow_conv(long long base, long long exp) {
    if (exp >= 0)
        return ipow(ExactInt(base), static_cast<unsigned long>(exp));
    if (base == 1)
        return 1;
    if (base == -1)
        return (exp % 2 == 0) ? 1 : -1;
    throw std::domain_error("pow_conv: negative exponent for base " + std::to_string(base));
}

inline ExactInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    if (k > n - k)
        k = n - k;
    ExactInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i; // exact at every step
    }
    return r;
}

inline ExactInt factorial(long long n) {
    ExactInt r = 1;
    for (long long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline ExactRational rat_pow(const ExactRational& base, long long exp) {
    if (exp >= 0) {
        ExactRational r = 1, b = base;
        unsigned long e = static_cast<unsigned long>(exp);
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
    if (base == 0)
        throw std::domain_error("rat_pow: negative power of zero");
    return 1 / rat_pow(base, -exp);
}

inline std::string rational_string(const ExactRational& q) {
    ExactInt num = boost::multiprecision::numerator(q);
    ExactInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

/* Fixed-point decimal rendering of an exact rational, round-half-even on
   the final digit. */
inline std::string decimal_string(const ExactRational& v, int digits) {
    if (digits < 0)
        throw std::invalid_argument("decimal_string: digits < 0");
    ExactInt num = boost::multiprecision::numerator(v);
    ExactInt den = boost::multiprecision::denominator(v);
    bool neg = num < 0;
    if (neg)
        num = -num;
    ExactInt scaled = num * ipow(10, static_cast<unsigned long>(digits));
    ExactInt q = scaled / den;
    ExactInt r = scaled % den;
    ExactInt twice = 2 * r;
    if (twice > den || (twice == den && (q & 1) == 1))
        ++q;
    std::string body = q.str();
    std::string out;
    if (digits == 0) {
        out = body;
    } else {
        if (static_cast<int>(body.size()) <= digits)
            body.insert(0, digits + 1 - body.size(), '0');
        out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    }
    if (neg && q != 0)
        out.insert(0, 1, '-');
    return out;
}

} // namespace parkfun
