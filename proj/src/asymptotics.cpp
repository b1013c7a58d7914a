#include "parkfun/asymptotics.hpp"

#include <json.hpp>

#include <stdexcept>

#include "parkfun/genfun.hpp"

namespace parkfun {

namespace {

using Rat = ExactRational;
using EiSeries = TruncatedSeries<EInvPoly>;

EInvPoly t_term(int i, Rat coeff) { return EInvPoly::t_power(i, std::move(coeff)); }

} // namespace

EInvPoly mu_closed(int k) {
    if (k < 0)
        throw std::invalid_argument("mu: k must be >= 0");
    EInvPoly p;
    for (int i = 0; i <= k; ++i) {
        Rat c = Rat(ipow(k + 1 - i, static_cast<unsigned long>(i))) / Rat(factorial(i));
        p = p + t_term(i, (i % 2 == 0) ? c : -c);
    }
    return p;
}

EInvPoly mu_recurrence(int k) {
    if (k < 0)
        throw std::invalid_argument("mu: k must be >= 0");
    std::vector<EInvPoly> mu(k + 1);
    mu[0] = EInvPoly(1);
    for (int j = 1; j <= k; ++j) {
        EInvPoly acc(1);
        for (int i = 1; i <= j; ++i) {
            Rat c = Rat(j - i + 1) * Rat(ipow(j + 1, static_cast<unsigned long>(i - 1))) /
                    Rat(factorial(i));
            acc = acc - t_term(i, c) * mu[j - i];
        }
        mu[j] = acc;
    }
    return mu[k];
}

EInvPoly eta(int k) { return mu_closed(k) - mu_closed(k + 1); }

EInvPoly eta_sum_identity(int k) {
    EInvPoly acc;
    for (int i = 1; i <= k + 1; ++i)
        acc = acc + t_term(i, Rat(1) / Rat(factorial(i))) * mu_closed(k + 1 - i);
    return acc;
}

EInvPoly tau(int l) {
    if (l < 1)
        throw std::invalid_argument("tau: l must be >= 1");
    EInvPoly t_l(2); // tau_1 = 2
    for (int j = 1; j < l; ++j) {
        // tau_{j+1} = tau_j - j^{j-2}/(j-1)! e^{-j}
        Rat step = rat_pow(j, j - 2) / Rat(factorial(j - 1));
        t_l = t_l - t_term(j, step);
    }
    return t_l;
}

EInvPoly rho_closed(int l, int k) {
    if (k < 0)
        throw std::invalid_argument("rho: k must be >= 0");
    return tau(l) * mu_closed(k);
}

EInvPoly rho_recurrence(int l, int k) {
    if (k < 0)
        throw std::invalid_argument("rho: k must be >= 0");
    std::vector<EInvPoly> rho(k + 1);
    rho[0] = tau(l);
    for (int j = 1; j <= k; ++j) {
        EInvPoly acc = rho[j - 1];
        for (int i = 1; i <= j; ++i)
            acc = acc - t_term(i, Rat(1) / Rat(factorial(i))) * rho[j - i];
        rho[j] = acc;
    }
    return rho[k];
}

EInvPoly lambda_const(int l, int k) {
    if (k < 0)
        throw std::invalid_argument("lambda: k must be >= 0");
    EInvPoly acc;
    for (int i = 1; i <= k + 1; ++i)
        acc = acc + t_term(i, Rat(1) / Rat(factorial(i))) * rho_closed(l, k + 1 - i);
    return acc;
}

EInvPoly lambda_difference(int l, int k) { return rho_closed(l, k) - rho_closed(l, k + 1); }

const char* asym_family_name(AsymFamily f) {
    switch (f) {
    case AsymFamily::Mu: return "mu";
    case AsymFamily::Eta: return "eta";
    case AsymFamily::Tau: return "tau";
    case AsymFamily::Rho: return "rho";
    case AsymFamily::Lambda: return "lambda";
    }
    return "?";
}

namespace {

EiSeries ei_constant(Exp caps, EInvPoly v) { return EiSeries::constant(caps, std::move(v)); }

EiSeries ei_mono(Exp caps, Exp e, EInvPoly v) {
    EiSeries s(caps);
    s.add_term(e, std::move(v));
    return s;
}

/* e^{x/e} = exp(t*x): coefficient of x^j is t^j/j!. */
EiSeries exp_tx(Exp caps) {
    return ts_exp(ei_mono(caps, {1, 0, 0}, EInvPoly::t_power(1)));
}

/* t * v^2 * P(t*v) - 2v in the variable with index var. */
EiSeries tau_numerator(Exp caps, int var) {
    EiSeries pt = p_series<EInvPoly>(caps, var, EInvPoly::t_power(1)); // P(v/e)
    Exp sq = {0, 0, 0};
    sq[var] = 2;
    EiSeries first = ts_truncate(ts_mul_monomial(pt, sq, EInvPoly::t_power(1)), caps);
    Exp lin = {0, 0, 0};
    lin[var] = 1;
    return first - ei_mono(caps, lin, EInvPoly(2));
}

} // namespace

TruncatedSeries<EInvPoly> asym_gf(AsymFamily family, int cap_x, int cap_y) {
    if (cap_x < 1)
        throw std::invalid_argument("asym_gf: caps must be >= 1");
    const Exp c1 = {cap_x, 0, 0};
    switch (family) {
    case AsymFamily::Mu: {
        EiSeries den = exp_tx(c1) - ei_mono(c1, {1, 0, 0}, EInvPoly(1));
        return ts_reciprocal(den);
    }
    case AsymFamily::Eta: {
        const Exp work = {cap_x + 1, 0, 0};
        EiSeries num = ts_div_monomial(exp_tx(work) - ei_constant(work, EInvPoly(1)), {1, 0, 0});
        EiSeries den = exp_tx(c1) - ei_mono(c1, {1, 0, 0}, EInvPoly(1));
        return ts_mul(num, ts_reciprocal(den));
    }
    case AsymFamily::Tau: {
        EiSeries num = tau_numerator(c1, 0);
        EiSeries den = ei_mono(c1, {1, 0, 0}, EInvPoly(1)) - ei_constant(c1, EInvPoly(1));
        return ts_mul(num, ts_reciprocal(den));
    }
    case AsymFamily::Rho: {
        if (cap_y < 1)
            throw std::invalid_argument("asym_gf: rho needs a y cap >= 1");
        const Exp c2 = {cap_x, cap_y, 0};
        EiSeries num = tau_numerator(c2, 1);
        EiSeries y_minus_1 = ei_mono(c2, {0, 1, 0}, EInvPoly(1)) - ei_constant(c2, EInvPoly(1));
        EiSeries extx = exp_tx(c2) - ei_mono(c2, {1, 0, 0}, EInvPoly(1));
        return ts_mul(num, ts_reciprocal(ts_mul(y_minus_1, extx)));
    }
    case AsymFamily::Lambda: {
        if (cap_y < 1)
            throw std::invalid_argument("asym_gf: lambda needs a y cap >= 1");
        const Exp c2 = {cap_x, cap_y, 0};
        const Exp work = {cap_x + 1, cap_y, 0};
        EiSeries eta_num =
            ts_div_monomial(exp_tx(work) - ei_constant(work, EInvPoly(1)), {1, 0, 0});
        EiSeries eta_den = exp_tx(c2) - ei_mono(c2, {1, 0, 0}, EInvPoly(1));
        EiSeries eta_factor = ts_mul(eta_num, ts_reciprocal(eta_den));
        EiSeries tau_num = tau_numerator(c2, 1);
        EiSeries y_minus_1 = ei_mono(c2, {0, 1, 0}, EInvPoly(1)) - ei_constant(c2, EInvPoly(1));
        EiSeries tau_factor = ts_mul(tau_num, ts_reciprocal(y_minus_1));
        return ts_mul(eta_factor, tau_factor);
    }
    }
    throw std::invalid_argument("unknown asymptotic family");
}

ExactRational einv_approx(const ExactRational& bound) {
    if (bound <= 0)
        throw std::invalid_argument("einv_approx: bound must be positive");
    // alternating series sum (-1)^j/j!; truncation error <= first dropped term
    ExactRational sum = 0, term = 1;
    long long j = 0;
    while (true) {
        sum += term;
        ++j;
        term = -term / j;
        if (boost::multiprecision::abs(term) <= bound)
            break;
        if (j > 100000)
            throw std::logic_error("einv_approx failed to converge");
    }
    return sum;
}

std::string eval_einv(const EInvPoly& p, int digits) {
    if (digits < 1 || digits > 1000)
        throw std::invalid_argument("eval_einv: digits must be in [1, 1000]");
    if (p.is_constant())
        return decimal_string(p.coeff(0), digits);
    // |p(t~) - p(t)| <= (sum i|c_i|) |t~ - t| since both points lie in [0,1]
    ExactRational slope = p.deriv_abs_bound();
    ExactRational target = ExactRational(1, ipow(10, static_cast<unsigned long>(digits) + 5));
    ExactRational t = einv_approx(target / slope);
    return decimal_string(p.eval(t), digits);
}

ConvergenceReport convergence_report(AsymFamily family, int l, int k,
                                     const std::vector<long long>& samples, int digits,
                                     CountEngine& engine) {
    ConvergenceReport rep;
    rep.family = family;
    rep.l = l;
    rep.k = k;
    rep.digits = digits;

    switch (family) {
    case AsymFamily::Mu:
        rep.limit = mu_closed(k);
        break;
    case AsymFamily::Eta:
        rep.limit = eta(k);
        break;
    case AsymFamily::Tau:
        rep.limit = tau(l);
        break;
    case AsymFamily::Rho:
        rep.limit = rho_closed(l, k);
        break;
    case AsymFamily::Lambda:
        rep.limit = lambda_const(l, k);
        break;
    }

    // limit approximated far below the reporting precision
    ExactRational slope = rep.limit.deriv_abs_bound();
    ExactRational bound = ExactRational(1, ipow(10, static_cast<unsigned long>(digits) + 10));
    ExactRational t = einv_approx(slope == 0 ? bound : bound / slope);
    ExactRational limit_value = rep.limit.eval(t);

    for (long long n : samples) {
        int ni = static_cast<int>(n);
        ExactInt num;
        ExactInt den;
        switch (family) {
        case AsymFamily::Mu:
            if (ni < k + 2)
                throw std::invalid_argument("mu convergence needs n >= k+2");
            num = engine.le(ni, ni - k, Method::Formula);
            den = ipow(ni + 1, static_cast<unsigned long>(ni - 1));
            break;
        case AsymFamily::Eta:
            if (ni < k + 2)
                throw std::invalid_argument("eta convergence needs n >= k+2");
            num = engine.le(ni, ni - k, Method::Formula) -
                  engine.le(ni, ni - k - 1, Method::Formula);
            den = ipow(ni + 1, static_cast<unsigned long>(ni - 1));
            break;
        case AsymFamily::Tau:
            if (ni < l + 1)
                throw std::invalid_argument("tau convergence needs n >= l+1");
            num = engine.lead(ni, l, Method::Formula);
            den = ipow(ni + 1, static_cast<unsigned long>(ni - 2));
            break;
        case AsymFamily::Rho:
            if (ni < k + l + 2)
                throw std::invalid_argument("rho convergence needs n >= k+l+2");
            num = engine.le_lead(ni, ni - k, l, Method::RecurrenceB);
            den = ipow(ni + 1, static_cast<unsigned long>(ni - 2));
            break;
        case AsymFamily::Lambda:
            if (ni < k + l + 2)
                throw std::invalid_argument("lambda convergence needs n >= k+l+2");
            num = engine.le_lead(ni, ni - k, l, Method::RecurrenceB) -
                  engine.le_lead(ni, ni - k - 1, l, Method::RecurrenceB);
            den = ipow(ni + 1, static_cast<unsigned long>(ni - 2));
            break;
        }
        ConvergenceSample sample;
        sample.n = n;
        sample.ratio = ExactRational(num) / ExactRational(den);
        sample.error = boost::multiprecision::abs(sample.ratio - limit_value);
        rep.samples.push_back(std::move(sample));
    }
    return rep;
}

std::string convergence_json(const ConvergenceReport& report) {
    nlohmann::ordered_json j;
    j["family"] = asym_family_name(report.family);
    nlohmann::ordered_json params;
    if (report.family == AsymFamily::Tau || report.family == AsymFamily::Rho ||
        report.family == AsymFamily::Lambda)
        params["l"] = report.l;
    if (report.family != AsymFamily::Tau)
        params["k"] = report.k;
    j["params"] = std::move(params);
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (const auto& s : report.samples) {
        nlohmann::ordered_json row;
        row["n"] = s.n;
        row["ratio"] = decimal_string(s.ratio, report.digits);
        row["error"] = decimal_string(s.error, report.digits);
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    nlohmann::ordered_json poly = nlohmann::ordered_json::array();
    for (int i = 0; i <= report.limit.degree(); ++i)
        poly.push_back(rational_string(report.limit.coeff(i)));
    j["limit_poly"] = std::move(poly);
    j["limit_value"] = eval_einv(report.limit, report.digits);
    j["digits"] = report.digits;
    return j.dump(2);
}

} // namespace parkfun
