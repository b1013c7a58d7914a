#pragma once

#include <string>

#include "parkfun/einv.hpp"
#include "parkfun/exact.hpp"
#include "parkfun/series.hpp"

namespace parkfun {

/* The generating-function families. EGF normalizations differ: P, Q, R, H
   carry 1/n!, while L, T, F, D carry 1/(n-1)!. */
enum class GfName { P, Q, R, H, L, T, F, D };

const char* gf_name_string(GfName name);
int gf_arity(GfName name); // 1, 2 or 3 variables

struct SeriesCaps {
    int nx = 8;
    int ny = 8;
    int nz = 6;
};

using RatSeries = TruncatedSeries<ExactRational>;

/* P(x) = sum (n+1)^{n-1}/n! x^n, generalized: sum p_n/n! scale^n var^n
   placed inside the given caps rectangle. */
template <class R>
TruncatedSeries<R> p_series(Exp caps, int var, const R& scale) {
    TruncatedSeries<R> out(caps);
    ExactRational inv_fact = 1;
    R spow = RingOps<R>::one();
    for (int n = 0; n <= caps[var]; ++n) {
        if (n > 0) {
            inv_fact /= n;
            spow = spow * scale;
        }
        ExactRational c = ExactRational(pow_conv(n + 1, n - 1)) * inv_fact;
        Exp e = {0, 0, 0};
        e[var] = n;
        out.add_term(e, spow * RingOps<R>::from_rational(c));
    }
    return out;
}

RatSeries build_p(int cap);

/* Closed forms assembled from the engine primitives. */
RatSeries build_gf_closed(GfName name, const SeriesCaps& caps);

/* Slice route: materialize Q_k, R_k, H_k, T_k, F_{k,s}, D_{k,s} by their
   stepping recurrences and assemble the target series. */
RatSeries build_gf_recurrence(GfName name, const SeriesCaps& caps);

/* Slice route using the explicit per-slice formulas instead of stepping. */
RatSeries build_gf_explicit(GfName name, const SeriesCaps& caps);

RatSeries build_gf(GfName name, const SeriesCaps& caps); // closed route

/* Coefficient times its EGF factorial. Non-integral or negative results
   signal an implementation bug and throw std::logic_error. Index order:
   n is the x-exponent; k indexes the flaw/bound slice; s (F, D only) the
   leading slice (y-exponent). */
ExactInt count_from_gf(const RatSeries& series, GfName name, int n, int k = 0, int s = -1);

/* sum_{i=0}^{k} (-1)^i (k+1-i)^i / i! x^i — the alternating coefficient
   polynomial shared by the R/H/F slice formulas. */
RatSeries alt_sign_poly(int k, int cap);

std::string series_json(const std::string& name, const RatSeries& series);
std::string series_json(const std::string& name, const TruncatedSeries<EInvPoly>& series);

} // namespace parkfun
