#pragma once

#include <string>
#include <vector>

#include "parkfun/exact.hpp"
#include "parkfun/series.hpp"

namespace parkfun {

/* Polynomial in t with rational coefficients, t standing for e^{-1}.
   Every limit constant of the asymptotic families is such a polynomial,
   so equality between them is decidable. */
class EInvPoly {
public:
    EInvPoly() = default;
    EInvPoly(int v) : EInvPoly(ExactRational(v)) {}
    EInvPoly(ExactRational v) {
        if (v != 0)
            c_.push_back(std::move(v));
    }

    static EInvPoly t_power(int i, ExactRational coeff = 1) {
        EInvPoly p;
        if (coeff != 0) {
            p.c_.assign(i + 1, 0);
            p.c_[i] = std::move(coeff);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 when zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    ExactRational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return 0;
        return c_[i];
    }

    const std::vector<ExactRational>& coeffs() const { return c_; }

    EInvPoly operator+(const EInvPoly& o) const {
        EInvPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }

    EInvPoly operator-(const EInvPoly& o) const { return *this + (-o); }

    EInvPoly operator-() const {
        EInvPoly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    EInvPoly operator*(const EInvPoly& o) const {
        EInvPoly r;
        if (is_zero() || o.is_zero())
            return r;
        r.c_.assign(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        r.trim();
        return r;
    }

    bool operator==(const EInvPoly& o) const { return c_ == o.c_; }
    bool operator!=(const EInvPoly& o) const { return !(*this == o); }

    /* Exact evaluation at a rational stand-in for e^{-1}. */
    ExactRational eval(const ExactRational& t) const {
        ExactRational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    /* sum_i i*|c_i|, the Lipschitz bound used to size the e^{-1} approximation. */
    ExactRational deriv_abs_bound() const {
        ExactRational m = 0;
        for (std::size_t i = 1; i < c_.size(); ++i)
            m += ExactRational(static_cast<long>(i)) * boost::multiprecision::abs(c_[i]);
        return m;
    }

    std::string to_string() const;

private:
    std::vector<ExactRational> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
};

inline std::string EInvPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        ExactRational c = coeff(i);
        if (c == 0)
            continue;
        bool neg = c < 0;
        ExactRational a = neg ? ExactRational(-c) : c;
        std::string mag;
        if (i == 0) {
            mag = rational_string(a);
        } else {
            std::string body = (i == 1) ? "t" : "t^" + std::to_string(i);
            if (a == 1)
                mag = body;
            else if (boost::multiprecision::denominator(a) == 1)
                mag = boost::multiprecision::numerator(a).str() + "*" + body;
            else
                mag = "(" + rational_string(a) + ")*" + body;
        }
        if (out.empty())
            out = (neg ? "-" : "") + mag;
        else
            out += (neg ? " - " : " + ") + mag;
    }
    return out;
}

template <>
struct RingOps<EInvPoly> {
    static EInvPoly zero() { return EInvPoly(); }
    static EInvPoly one() { return EInvPoly(1); }
    static EInvPoly from_rational(const ExactRational& q) { return EInvPoly(q); }
    static bool is_zero(const EInvPoly& v) { return v.is_zero(); }
    // units of Q[t] are the nonzero constants
    static bool is_unit(const EInvPoly& v) { return v.is_constant() && !v.is_zero(); }
    static EInvPoly inverse(const EInvPoly& v) {
        if (!is_unit(v))
            throw std::domain_error("EInvPoly inverse: not a unit (degree > 0 or zero)");
        return EInvPoly(1 / v.coeff(0));
    }
};

} // namespace parkfun
