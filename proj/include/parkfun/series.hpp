#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkfun/exact.hpp"

namespace parkfun {

/* Exponent vector over the fixed variable universe (x, y, z). A univariate
   series simply has caps 0 on the unused variables. */
using Exp = std::array<int, 3>;

inline std::string exp_string(const Exp& e) {
    return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) +
           ")";
}

/* Coefficient-ring hooks. The engine needs exact equality, units for
   reciprocals, and an embedding of Q (series exponentials divide by j!). */
template <class R>
struct RingOps;

template <>
struct RingOps<ExactRational> {
    static ExactRational zero() { return 0; }
    static ExactRational one() { return 1; }
    static ExactRational from_rational(const ExactRational& q) { return q; }
    static bool is_zero(const ExactRational& v) { return v == 0; }
    static bool is_unit(const ExactRational& v) { return v != 0; }
    static ExactRational inverse(const ExactRational& v) {
        if (v == 0)
            throw std::domain_error("inverse of zero");
        return 1 / v;
    }
};

template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(Exp caps) : caps_(caps) {
        for (int c : caps_)
            if (c < 0)
                throw std::invalid_argument("series caps must be >= 0");
    }

    static TruncatedSeries constant(Exp caps, R value) {
        TruncatedSeries s(caps);
        s.add_term({0, 0, 0}, std::move(value));
        return s;
    }

    static TruncatedSeries monomial(Exp caps, Exp e, R value) {
        TruncatedSeries s(caps);
        if (!s.within(e))
            throw std::invalid_argument("monomial exponent " + exp_string(e) + " beyond caps");
        s.add_term(e, std::move(value));
        return s;
    }

    const Exp& caps() const { return caps_; }
    const std::map<Exp, R>& terms() const { return terms_; }

    bool within(const Exp& e) const {
        for (int v = 0; v < 3; ++v)
            if (e[v] < 0 || e[v] > caps_[v])
                return false;
        return true;
    }

    R coeff(const Exp& e) const {
        if (!within(e))
            throw std::out_of_range("coefficient index " + exp_string(e) + " beyond caps");
        auto it = terms_.find(e);
        return it == terms_.end() ? RingOps<R>::zero() : it->second;
    }

    /* Accumulate; silently drops exponents beyond caps and prunes zeros. */
    void add_term(const Exp& e, R value) {
        if (!within(e) || RingOps<R>::is_zero(value))
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(value));
            return;
        }
        it->second = it->second + value;
        if (RingOps<R>::is_zero(it->second))
            terms_.erase(it);
    }

    bool operator==(const TruncatedSeries& other) const {
        return caps_ == other.caps_ && terms_ == other.terms_;
    }
    bool operator!=(const TruncatedSeries& other) const { return !(*this == other); }

private:
    Exp caps_;
    std::map<Exp, R> terms_;
};

namespace detail {
inline void require_same_caps(const Exp& a, const Exp& b) {
    if (a != b)
        throw std::invalid_argument("series caps mismatch: " + exp_string(a) + " vs " +
                                    exp_string(b));
}

/* All lattice points within caps, sorted by total degree then lex. */
inline std::vector<Exp> graded_lattice(const Exp& caps) {
    std::vector<Exp> pts;
    pts.reserve(static_cast<std::size_t>(caps[0] + 1) * (caps[1] + 1) * (caps[2] + 1));
    for (int a = 0; a <= caps[0]; ++a)
        for (int b = 0; b <= caps[1]; ++b)
            for (int c = 0; c <= caps[2]; ++c)
                pts.push_back({a, b, c});
    std::sort(pts.begin(), pts.end(), [](const Exp& l, const Exp& r) {
        int dl = l[0] + l[1] + l[2], dr = r[0] + r[1] + r[2];
        if (dl != dr)
            return dl < dr;
        return l < r;
    });
    return pts;
}
} // namespace detail

template <class R>
TruncatedSeries<R> ts_add(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    detail::require_same_caps(a.caps(), b.caps());
    TruncatedSeries<R> out = a;
    for (const auto& [e, c] : b.terms())
        out.add_term(e, c);
    return out;
}

template <class R>
TruncatedSeries<R> ts_neg(const TruncatedSeries<R>& a) {
    TruncatedSeries<R> out(a.caps());
    for (const auto& [e, c] : a.terms())
        out.add_term(e, RingOps<R>::zero() - c);
    return out;
}

template <class R>
TruncatedSeries<R> ts_sub(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return ts_add(a, ts_neg(b));
}

/* Cauchy product, truncated back to the shared caps. */
template <class R>
TruncatedSeries<R> ts_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    detail::require_same_caps(a.caps(), b.caps());
    TruncatedSeries<R> out(a.caps());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exp e = {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (out.within(e))
                out.add_term(e, ca * cb);
        }
    return out;
}

template <class R>
TruncatedSeries<R> ts_scale(const TruncatedSeries<R>& a, const R& factor) {
    TruncatedSeries<R> out(a.caps());
    for (const auto& [e, c] : a.terms())
        out.add_term(e, c * factor);
    return out;
}

template <class R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return ts_add(a, b);
}
template <class R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return ts_sub(a, b);
}
template <class R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return ts_mul(a, b);
}

/* Multiplicative inverse; the constant coefficient must be a unit. Solved
   order by order on total degree, so every in-cap coefficient is exact. */
template <class R>
TruncatedSeries<R> ts_reciprocal(const TruncatedSeries<R>& a) {
    R a0 = a.coeff({0, 0, 0});
    if (!RingOps<R>::is_unit(a0))
        throw std::invalid_argument("ts_reciprocal: constant coefficient is not a unit");
    R inv0 = RingOps<R>::inverse(a0);
    TruncatedSeries<R> out(a.caps());
    for (const Exp& e : detail::graded_lattice(a.caps())) {
        R rhs = (e == Exp{0, 0, 0}) ? RingOps<R>::one() : RingOps<R>::zero();
        for (const auto& [u, cu] : a.terms()) {
            if (u == Exp{0, 0, 0})
                continue;
            if (u[0] > e[0] || u[1] > e[1] || u[2] > e[2])
                continue;
            Exp rest = {e[0] - u[0], e[1] - u[1], e[2] - u[2]};
            rhs = rhs - cu * out.coeff(rest);
        }
        out.add_term(e, inv0 * rhs);
    }
    return out;
}

/* exp(a) = sum a^j / j!; requires zero constant term (so powers terminate
   at the total-degree bound) and a ring containing the rationals. */
template <class R>
TruncatedSeries<R> ts_exp(const TruncatedSeries<R>& a) {
    if (!RingOps<R>::is_zero(a.coeff({0, 0, 0})))
        throw std::invalid_argument("ts_exp: constant term must be zero");
    const Exp caps = a.caps();
    TruncatedSeries<R> out = TruncatedSeries<R>::constant(caps, RingOps<R>::one());
    TruncatedSeries<R> pw = TruncatedSeries<R>::constant(caps, RingOps<R>::one());
    ExactRational inv_fact = 1;
    int max_total = caps[0] + caps[1] + caps[2];
    for (int j = 1; j <= max_total; ++j) {
        pw = ts_mul(pw, a);
        if (pw.terms().empty())
            break;
        inv_fact /= j;
        out = ts_add(out, ts_scale(pw, RingOps<R>::from_rational(inv_fact)));
    }
    return out;
}

/* Formal d/d(var); the cap of var shrinks by one. */
template <class R>
TruncatedSeries<R> ts_derivative(const TruncatedSeries<R>& a, int var) {
    Exp caps = a.caps();
    caps[var] = caps[var] > 0 ? caps[var] - 1 : 0;
    TruncatedSeries<R> out(caps);
    for (const auto& [e, c] : a.terms()) {
        if (e[var] == 0)
            continue;
        Exp ne = e;
        ne[var] -= 1;
        out.add_term(ne, c * RingOps<R>::from_rational(ExactRational(e[var])));
    }
    return out;
}

/* Substitute var -> scalar * (monomial); e.g. x -> x*y or x -> t*x. */
template <class R>
TruncatedSeries<R> ts_subst(const TruncatedSeries<R>& a, int var, const R& scalar,
                            const Exp& mono) {
    TruncatedSeries<R> out(a.caps());
    for (const auto& [e, c] : a.terms()) {
        int q = e[var];
        Exp ne = e;
        ne[var] = 0;
        for (int v = 0; v < 3; ++v)
            ne[v] += q * mono[v];
        if (!out.within(ne))
            continue;
        R factor = c;
        for (int j = 0; j < q; ++j)
            factor = factor * scalar;
        out.add_term(ne, std::move(factor));
    }
    return out;
}

/* Multiply by scalar*monomial. This is exact, so caps grow by the
   monomial's exponent. */
template <class R>
TruncatedSeries<R> ts_mul_monomial(const TruncatedSeries<R>& a, const Exp& mono,
                                   const R& scalar) {
    Exp caps = {a.caps()[0] + mono[0], a.caps()[1] + mono[1], a.caps()[2] + mono[2]};
    TruncatedSeries<R> out(caps);
    for (const auto& [e, c] : a.terms())
        out.add_term({e[0] + mono[0], e[1] + mono[1], e[2] + mono[2]}, c * scalar);
    return out;
}

template <class R>
TruncatedSeries<R> ts_mul_monomial(const TruncatedSeries<R>& a, const Exp& mono) {
    return ts_mul_monomial(a, mono, RingOps<R>::one());
}

/* Exact division by a monomial: every term must carry at least the
   monomial's exponents; caps shrink accordingly (coefficients that would
   need mass beyond the old caps are not claimed). */
template <class R>
TruncatedSeries<R> ts_div_monomial(const TruncatedSeries<R>& a, const Exp& mono) {
    Exp caps;
    for (int v = 0; v < 3; ++v) {
        caps[v] = a.caps()[v] - mono[v];
        if (caps[v] < 0)
            throw std::invalid_argument("ts_div_monomial: caps smaller than divisor");
    }
    TruncatedSeries<R> out(caps);
    for (const auto& [e, c] : a.terms()) {
        for (int v = 0; v < 3; ++v)
            if (e[v] < mono[v])
                throw std::invalid_argument("ts_div_monomial: term " + exp_string(e) +
                                            " not divisible by " + exp_string(mono));
        out.add_term({e[0] - mono[0], e[1] - mono[1], e[2] - mono[2]}, c);
    }
    return out;
}

/* Restrict to smaller caps (dropping out-of-range terms). */
template <class R>
TruncatedSeries<R> ts_truncate(const TruncatedSeries<R>& a, const Exp& caps) {
    for (int v = 0; v < 3; ++v)
        if (caps[v] > a.caps()[v])
            throw std::invalid_argument("ts_truncate may only shrink caps");
    TruncatedSeries<R> out(caps);
    for (const auto& [e, c] : a.terms())
        out.add_term(e, c);
    return out;
}

/* Reinterpret within larger caps. Only sound when the series genuinely has
   no mass outside its old rectangle (a univariate embedded alongside more
   variables, or a slice being assembled). */
template <class R>
TruncatedSeries<R> ts_extend(const TruncatedSeries<R>& a, const Exp& caps) {
    for (int v = 0; v < 3; ++v)
        if (caps[v] < a.caps()[v])
            throw std::invalid_argument("ts_extend may only grow caps");
    TruncatedSeries<R> out(caps);
    for (const auto& [e, c] : a.terms())
        out.add_term(e, c);
    return out;
}

/* Coefficientwise comparison on a sub-rectangle of both series. */
template <class R>
bool ts_equal_on(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b, const Exp& caps) {
    for (int v = 0; v < 3; ++v)
        if (caps[v] > a.caps()[v] || caps[v] > b.caps()[v])
            throw std::invalid_argument("ts_equal_on: rectangle beyond caps");
    for (int i = 0; i <= caps[0]; ++i)
        for (int j = 0; j <= caps[1]; ++j)
            for (int k = 0; k <= caps[2]; ++k)
                if (!(a.coeff({i, j, k}) == b.coeff({i, j, k})))
                    return false;
    return true;
}

} // namespace parkfun
