#pragma once

#include <string>
#include <vector>

#include "parkfun/counts.hpp"
#include "parkfun/einv.hpp"
#include "parkfun/exact.hpp"
#include "parkfun/series.hpp"

namespace parkfun {

/* Limit constants of the normalized counting sequences, as exact
   polynomials in t = e^{-1}. */

EInvPoly mu_closed(int k);
EInvPoly mu_recurrence(int k);
inline EInvPoly mu(int k) { return mu_closed(k); }

EInvPoly eta(int k);              // mu(k) - mu(k+1)
EInvPoly eta_sum_identity(int k); // sum_{i=1}^{k+1} t^i/i! mu(k+1-i)

EInvPoly tau(int l); // telescoped from tau_1 = 2

EInvPoly rho_closed(int l, int k); // tau(l) * alternating sum = tau(l)*mu(k)
EInvPoly rho_recurrence(int l, int k);
inline EInvPoly rho(int l, int k) { return rho_closed(l, k); }

EInvPoly lambda_const(int l, int k);      // sum_{i=1}^{k+1} t^i/i! rho(l,k+1-i)
EInvPoly lambda_difference(int l, int k); // rho(l,k) - rho(l,k+1)

enum class AsymFamily { Mu, Eta, Tau, Rho, Lambda };
const char* asym_family_name(AsymFamily f);

/* Generating functions over the Q[t] coefficient ring. Caps: x indexes k
   (mu, eta, rho, lambda) or l (tau); y indexes l (rho, lambda). */
TruncatedSeries<EInvPoly> asym_gf(AsymFamily family, int cap_x, int cap_y = 0);

/* Rational approximation of e^{-1} with |error| <= bound (alternating
   series, rigorous tail). */
ExactRational einv_approx(const ExactRational& bound);

/* Evaluate at t = e^{-1} with total error < 10^{-digits}; fixed-point
   decimal, round-half-even on the last digit. */
std::string eval_einv(const EInvPoly& p, int digits);

struct ConvergenceSample {
    long long n;
    ExactRational ratio; // exact count over exact normalization
    ExactRational error; // |ratio - limit|, limit approximated far below digits
};

struct ConvergenceReport {
    AsymFamily family;
    int l = -1; // unused for mu/eta
    int k = -1; // unused for tau
    std::vector<ConvergenceSample> samples;
    EInvPoly limit;
    int digits = 30;
};

ConvergenceReport convergence_report(AsymFamily family, int l, int k,
                                     const std::vector<long long>& samples, int digits,
                                     CountEngine& engine);

std::string convergence_json(const ConvergenceReport& report);

} // namespace parkfun
