#include "parkfun/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

#include "parkfun/asymptotics.hpp"
#include "parkfun/einv.hpp"

namespace parkfun {

namespace {

class Runner {
public:
    explicit Runner(std::string suite) : start_(std::chrono::steady_clock::now()) {
        outcome_.suite = std::move(suite);
    }

    void eq(const std::string& check, const ExactInt& expected, const ExactInt& got) {
        ++outcome_.checks;
        if (expected != got)
            outcome_.failures.push_back({check, expected.str(), got.str()});
    }

    void truth(const std::string& check, bool got, const std::string& detail = "") {
        ++outcome_.checks;
        if (!got)
            outcome_.failures.push_back({check, "true", detail.empty() ? "false" : detail});
    }

    template <class A, class B>
    void same(const std::string& check, const A& expected, const B& got) {
        ++outcome_.checks;
        if (!(expected == got))
            outcome_.failures.push_back({check, "equal", "different"});
    }

    VerifyOutcome finish() {
        outcome_.elapsed_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start_)
                                  .count();
        return outcome_;
    }

private:
    VerifyOutcome outcome_;
    std::chrono::steady_clock::time_point start_;
};

std::string tag(const std::string& base, std::initializer_list<int> idx) {
    std::string s = base + "(";
    bool first = true;
    for (int v : idx) {
        if (!first)
            s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + ")";
}

} // namespace

VerifyOutcome verify_identities(int max_n, CountEngine& eng) {
    Runner run("identities");

    // conventions: the empty preference set
    run.eq("p_0", 1, eng.all(0));
    run.eq("p_{0;<=0}", 1, eng.le(0, 0));
    for (int m : {0, 3, 5})
        run.eq(tag("riordan_empty", {0, m}), 1, eng.riordan(0, m));

    int oracle_n = std::min(max_n, 7);

    for (int n = 1; n <= max_n; ++n) {
        // p_{n;<=s}: formula vs both recurrences
        for (int s = 0; s <= n; ++s) {
            ExactInt formula = eng.le(n, s, Method::Formula);
            run.eq(tag("le_rec_a", {n, s}), formula, eng.le(n, s, Method::RecurrenceA));
            run.eq(tag("le_rec_b", {n, s}), formula, eng.le(n, s, Method::RecurrenceB));
        }
        // p_{n;=s}: difference vs recurrence, and column telescoping
        ExactInt column = 0;
        for (int s = 1; s <= n; ++s) {
            ExactInt diff = eng.eq(n, s, Method::Formula);
            run.eq(tag("eq_rec", {n, s}), diff, eng.eq(n, s, Method::RecurrenceA));
            column += diff;
            run.eq(tag("eq_column_sum", {n, s}), eng.le(n, s), column);
        }
        run.eq(tag("eq_top", {n}), ipow(n, static_cast<unsigned long>(n - 1)), eng.eq(n, n));
        // p_n^l anchors
        run.eq(tag("lead_top", {n}), eng.all(n - 1), eng.lead(n, n));
        // p_{n;<=s}^l: formula vs recurrences, row sums, drop-leading identity
        for (int s = 1; s <= n; ++s) {
            ExactInt row = 0;
            for (int l = 1; l <= s; ++l) {
                ExactInt formula = eng.le_lead(n, s, l, Method::Formula);
                run.eq(tag("le_lead_rec_a", {n, s, l}), formula,
                       eng.le_lead(n, s, l, Method::RecurrenceA));
                run.eq(tag("le_lead_rec_b", {n, s, l}), formula,
                       eng.le_lead(n, s, l, Method::RecurrenceB));
                run.eq(tag("eq_lead_rec", {n, s, l}), eng.eq_lead(n, s, l, Method::Formula),
                       eng.eq_lead(n, s, l, Method::RecurrenceA));
                row += formula;
            }
            run.eq(tag("le_lead_row_sum", {n, s}), eng.le(n, s), row);
            run.eq(tag("le_lead_drop", {n, s}),
                   s == n ? eng.all(n - 1) : eng.le(n - 1, s), eng.le_lead(n, s, s));
            run.eq(tag("eq_lead_drop", {n, s}),
                   s == n ? eng.all(n - 1) : eng.le(n - 1, s), eng.eq_lead(n, s, s));
        }
        // erase-spaces equivalence against the complete-flaw formula
        for (int m = 0; m <= n; ++m)
            run.eq(tag("flaw_vs_le", {n, m}), eng.le(n, m), eng.flaw_complete(n, m));
    }

    // oracle agreement
    for (int n = 1; n <= oracle_n; ++n) {
        for (int s = 1; s <= n; ++s) {
            run.eq(tag("oracle_le", {n, s}), eng.le(n, s), eng.le(n, s, Method::Oracle));
            run.eq(tag("oracle_eq", {n, s}), eng.eq(n, s), eng.eq(n, s, Method::Oracle));
            for (int l = 1; l <= s; ++l) {
                run.eq(tag("oracle_le_lead", {n, s, l}), eng.le_lead(n, s, l),
                       eng.le_lead(n, s, l, Method::Oracle));
                run.eq(tag("oracle_eq_lead", {n, s, l}), eng.eq_lead(n, s, l),
                       eng.eq_lead(n, s, l, Method::Oracle));
            }
        }
        for (int l = 1; l <= n; ++l)
            run.eq(tag("oracle_lead", {n, l}), eng.lead(n, l), eng.lead(n, l, Method::Oracle));
        run.eq(tag("oracle_flaw_total", {n}), eng.all(n), eng.all(n, Method::Oracle));
    }
    // flaw classification sums to s^n over all flaw counts
    for (int n = 1; n <= std::min(max_n, 6); ++n)
        for (int s = 1; s <= n + 1; ++s) {
            ExactInt total = 0;
            for (int k = 0; k <= n; ++k)
                total += oracle_count({n, n, s, k, {}, {}}, eng.oracle_opts);
            run.eq(tag("flaw_classification_total", {n, s}),
                   ipow(s, static_cast<unsigned long>(n)), total);
        }

    // surplus: composition = recurrence = Riordan formula, n <= 6, k <= 4
    for (int n = 0; n <= std::min(max_n, 6); ++n)
        for (int k = 0; k <= 4; ++k) {
            ExactInt riordan = eng.riordan(n, n + k);
            run.eq(tag("surplus_composition", {n, k}), riordan, eng.surplus_composition(n, k));
            run.eq(tag("surplus_recurrence", {n, k}), riordan, eng.surplus_recurrence(n, k));
        }

    // the split-at-last-empty-space sum runs to i = n: at (n,k) = (2,1) the
    // full sum reproduces 8; truncating the sum at i = k would give 5
    {
        ExactInt full = eng.surplus_recurrence(2, 1);
        run.eq("surplus_limit_full(2,1)", eng.riordan(2, 3), full);
        ExactInt truncated = 0;
        for (int i = 0; i <= 1; ++i)
            truncated += binomial(2, i) * eng.all(i) * eng.all(2 - i);
        run.eq("surplus_limit_truncated(2,1)", 5, truncated);
        run.truth("surplus_limit_differs", full != truncated);
    }

    // Abel identity with signed powers, n <= 10, s <= 12
    for (int n = 1; n <= 10; ++n)
        for (int s = 1; s <= 12; ++s) {
            ExactInt sum = 0;
            for (int i = 0; i <= n; ++i)
                sum += binomial(n, i) * pow_conv(i + 1, i - 1) *
                       ipow(s - i - 1, static_cast<unsigned long>(n - i));
            run.eq(tag("abel", {n, s}), ipow(s, static_cast<unsigned long>(n)), sum);
        }

    // worked example: p_{7;<=3} via recurrence (2) with its pinned inputs
    run.eq("example_p_3_le_3", 16, eng.le(3, 3));
    run.eq("example_p_4_le_3", 61, eng.le(4, 3));
    run.eq("example_p_5_le_3", 206, eng.le(5, 3));
    run.eq("example_p_6_le_3", 659, eng.le(6, 3));
    {
        ExactInt rhs = ipow(8, 6);
        for (int i = 1; i <= 4; ++i)
            rhs -= binomial(7, i) * ExactInt(5 - i) * ipow(5, static_cast<unsigned long>(i - 1)) *
                   eng.le(7 - i, 3);
        run.eq("example_p_7_le_3", 2052, rhs);
        run.eq("example_p_7_le_3_rec_b", 2052, eng.le(7, 3, Method::RecurrenceB));
    }

    // worked example: p_{7;<=6}^3 via the closed form with pinned inputs
    run.eq("example_p_3_lead_3", 3, eng.lead(3, 3));
    run.eq("example_p_4_lead_3", 25, eng.lead(4, 3));
    {
        ExactInt rhs = ipow(6, 6);
        for (int i = 0; i <= 1; ++i)
            rhs -= binomial(6, i) * eng.all(i) * ipow(5 - i, static_cast<unsigned long>(6 - i));
        for (int i = 3; i <= 4; ++i)
            rhs -= binomial(6, i - 1) * eng.lead(i, 3) * ipow(5 - i, static_cast<unsigned long>(7 - i));
        run.eq("example_p_7_le_6_lead_3", 23667, rhs);
    }

    // worked example: p_{7;<=6}^3 = p_7^3 - C(6,1) p_{6;<=6}^3
    run.eq("example_p_7_lead_3", 40953, eng.lead(7, 3));
    run.eq("example_p_6_le_6_lead_3", 2881, eng.le_lead(6, 6, 3));
    run.eq("example_p_7_le_6_lead_3_rec",
           eng.lead(7, 3) - 6 * eng.le_lead(6, 6, 3), eng.le_lead(7, 6, 3));

    return run.finish();
}

VerifyOutcome verify_bijections(int max_n, const OracleOptions& opts) {
    Runner run("bijections");
    for (int n = 1; n <= max_n; ++n) {
        for (int s = 1; s <= n; ++s) {
            auto erase = verify_bijection_erase_spaces(n, s, opts);
            run.truth(tag("erase_spaces", {n, s}), erase.is_bijection,
                      erase.domain_size.str() + " vs " + erase.codomain_size.str());
            auto drop = verify_bijection_drop_leading(n, s, opts);
            run.truth(tag("drop_leading", {n, s}), drop.is_bijection,
                      drop.domain_size.str() + " vs " + drop.codomain_size.str());
        }
        auto lead1 = verify_bijection_leading_one(n, opts);
        run.truth(tag("leading_one", {n}), lead1.is_bijection,
                  lead1.domain_size.str() + " vs " + lead1.codomain_size.str());
        ExactInt lead1_expected =
            (n == 1) ? ExactInt(1) : 2 * ipow(n + 1, static_cast<unsigned long>(n - 2));
        run.eq(tag("leading_one_size", {n}), lead1_expected, lead1.domain_size);
    }
    return run.finish();
}

VerifyOutcome verify_series(const SeriesCaps& caps, CountEngine& eng) {
    Runner run("series");
    const int nx = caps.nx, ny = caps.ny, nz = caps.nz;

    for (GfName name : {GfName::P, GfName::Q, GfName::R, GfName::H, GfName::L, GfName::T,
                        GfName::F, GfName::D}) {
        RatSeries closed = build_gf_closed(name, caps);
        RatSeries rec = build_gf_recurrence(name, caps);
        RatSeries expl = build_gf_explicit(name, caps);
        run.same(std::string("route_closed_vs_recurrence_") + gf_name_string(name), closed, rec);
        run.same(std::string("route_recurrence_vs_explicit_") + gf_name_string(name), rec, expl);
    }

    const Exp ux = {nx, 0, 0};
    RatSeries P = build_p(nx);

    { // psi(xP(x)) = x with psi(u) = u e^{-u}
        RatSeries u = ts_truncate(ts_mul_monomial(P, {1, 0, 0}), ux);
        RatSeries psi = ts_mul(u, ts_exp(ts_neg(u)));
        run.same("psi_inverse", RatSeries::monomial(ux, {1, 0, 0}, 1), psi);
    }
    { // P' = P^2 + xPP' on the cap-1 rectangle
        RatSeries dP = ts_derivative(P, 0);
        RatSeries rhs = ts_mul(P, P) +
                        ts_truncate(ts_mul_monomial(ts_mul(ts_truncate(P, {nx - 1, 0, 0}), dP),
                                                    {1, 0, 0}),
                                    ux);
        run.truth("p_differential", ts_equal_on(dP, rhs, {nx - 1, 0, 0}));
    }
    { // L + xL' = 2xP'
        RatSeries L = build_gf_closed(GfName::L, caps);
        RatSeries lhs = L + ts_truncate(ts_mul_monomial(ts_derivative(L, 0), {1, 0, 0}), ux);
        RatSeries rhs = ts_scale(ts_truncate(ts_mul_monomial(ts_derivative(P, 0), {1, 0, 0}), ux),
                                 ExactRational(2));
        run.truth("l_differential", ts_equal_on(lhs, rhs, {nx - 1, 0, 0}));
    }
    { // T_0 + xT_0' = 2xP + x^2 P'
        RatSeries T0 = ts_truncate(ts_mul_monomial(P, {1, 0, 0}), ux);
        RatSeries lhs = T0 + ts_truncate(ts_mul_monomial(ts_derivative(T0, 0), {1, 0, 0}), ux);
        RatSeries rhs = ts_scale(ts_truncate(ts_mul_monomial(P, {1, 0, 0}), ux), ExactRational(2)) +
                        ts_truncate(ts_mul_monomial(ts_derivative(P, 0), {2, 0, 0}), ux);
        run.truth("t0_differential", ts_equal_on(lhs, rhs, {nx - 1, 0, 0}));
    }
    { // T(x,y) - xP(x) = yT(x,y) + xP(x)[P(xy)-1] - xy[P(xy)]^2
        const Exp c2 = {nx, ny, 0};
        RatSeries T = build_gf_closed(GfName::T, caps);
        RatSeries P2 = p_series<ExactRational>(c2, 0, 1);
        RatSeries xP = ts_truncate(ts_mul_monomial(P2, {1, 0, 0}), c2);
        RatSeries Pxy = ts_subst(P2, 0, ExactRational(1), {1, 1, 0});
        RatSeries lhs = T - xP;
        RatSeries rhs = ts_truncate(ts_mul_monomial(T, {0, 1, 0}), c2) +
                        ts_mul(xP, Pxy - RatSeries::constant(c2, 1)) -
                        ts_truncate(ts_mul_monomial(ts_mul(Pxy, Pxy), {1, 1, 0}), c2);
        run.same("t_functional_equation", lhs, rhs);
    }

    // coefficient-to-count contracts across the full rectangles
    RatSeries Q = build_gf_closed(GfName::Q, caps);
    RatSeries R = build_gf_closed(GfName::R, caps);
    RatSeries H = build_gf_closed(GfName::H, caps);
    RatSeries L = build_gf_closed(GfName::L, caps);
    RatSeries T = build_gf_closed(GfName::T, caps);
    RatSeries F = build_gf_closed(GfName::F, caps);
    RatSeries D = build_gf_closed(GfName::D, caps);

    for (int n = 0; n <= nx; ++n) {
        run.eq(tag("count_P", {n}), eng.all(n), count_from_gf(build_p(nx), GfName::P, n));
        if (n >= 1)
            run.eq(tag("count_L", {n}), eng.lead(n, 1), count_from_gf(L, GfName::L, n));
        for (int k = 0; k <= ny; ++k) {
            run.eq(tag("count_Q", {n, k}), eng.riordan(n, n + k), count_from_gf(Q, GfName::Q, n, k));
            ExactInt expect_r = (k <= n) ? eng.le(n, n - k) : ExactInt(0);
            run.eq(tag("count_R", {n, k}), expect_r, count_from_gf(R, GfName::R, n, k));
            ExactInt expect_h = 0;
            if (k < n)
                expect_h = eng.eq(n, n - k);
            else if (k == n)
                expect_h = (n == 0) ? 1 : 0; // p_{n;=0}
            run.eq(tag("count_H", {n, k}), expect_h, count_from_gf(H, GfName::H, n, k));
            ExactInt expect_t = (n >= k + 1) ? eng.lead(n, n - k) : ExactInt(0);
            run.eq(tag("count_T", {n, k}), expect_t, count_from_gf(T, GfName::T, n, k));
        }
        for (int s = 0; s <= ny; ++s)
            for (int k = 0; k <= nz; ++k) {
                ExactInt expect_f =
                    (n >= s + 1 && s >= k) ? eng.le_lead(n, n - k, n - s) : ExactInt(0);
                run.eq(tag("count_F", {n, s, k}), expect_f, count_from_gf(F, GfName::F, n, k, s));
                ExactInt expect_d =
                    (n >= s + 1 && s >= k) ? eng.eq_lead(n, n - k, n - s) : ExactInt(0);
                run.eq(tag("count_D", {n, s, k}), expect_d, count_from_gf(D, GfName::D, n, k, s));
            }
    }

    // oracle spot checks where a sweep is cheap
    for (int n = 1; n <= std::min(nx, 6); ++n)
        for (int k = 0; k <= std::min(ny, n); ++k)
            run.eq(tag("count_R_oracle", {n, k}),
                   count_from_gf(R, GfName::R, n, k),
                   eng.le(n, n - k, Method::Oracle));

    return run.finish();
}

VerifyOutcome verify_asymptotics(int max_kl, int series_cap) {
    Runner run("asymptotics");

    run.same("mu_0", EInvPoly(1), mu_closed(0));
    run.same("tau_1", EInvPoly(2), tau(1));
    for (int k = 0; k <= max_kl; ++k) {
        run.same(tag("mu_routes", {k}), mu_closed(k), mu_recurrence(k));
        run.same(tag("eta_routes", {k}), eta(k), eta_sum_identity(k));
    }
    for (int l = 1; l <= std::min(max_kl, 10); ++l) {
        run.truth(tag("tau_degree", {l}), tau(l).degree() == l - 1);
        for (int k = 0; k <= std::min(max_kl, 10); ++k) {
            run.same(tag("rho_routes", {l, k}), rho_closed(l, k), rho_recurrence(l, k));
            run.same(tag("rho_factorization", {l, k}), tau(l) * mu_closed(k), rho_recurrence(l, k));
            run.same(tag("lambda_routes", {l, k}), lambda_const(l, k), lambda_difference(l, k));
        }
        run.same(tag("rho_base", {l}), tau(l), rho_closed(l, 0));
    }
    { // telescoping
        EInvPoly acc;
        for (int k = 0; k <= max_kl; ++k) {
            acc = acc + eta(k);
            run.same(tag("eta_telescope", {k}), EInvPoly(1) - mu_closed(k + 1), acc);
        }
    }

    // series-coefficient agreement
    auto mu_gf = asym_gf(AsymFamily::Mu, series_cap);
    auto eta_gf = asym_gf(AsymFamily::Eta, series_cap);
    auto tau_gf = asym_gf(AsymFamily::Tau, series_cap);
    auto rho_gf = asym_gf(AsymFamily::Rho, series_cap, series_cap);
    auto lambda_gf = asym_gf(AsymFamily::Lambda, series_cap, series_cap);
    for (int k = 0; k <= series_cap; ++k) {
        run.same(tag("mu_series", {k}), mu_closed(k), mu_gf.coeff({k, 0, 0}));
        run.same(tag("eta_series", {k}), eta(k), eta_gf.coeff({k, 0, 0}));
        run.same(tag("tau_series", {k}), k >= 1 ? tau(k) : EInvPoly(),
                 tau_gf.coeff({k, 0, 0}));
        for (int l = 0; l <= series_cap; ++l) {
            run.same(tag("rho_series", {l, k}), l >= 1 ? rho_closed(l, k) : EInvPoly(),
                     rho_gf.coeff({k, l, 0}));
            run.same(tag("lambda_series", {l, k}), l >= 1 ? lambda_const(l, k) : EInvPoly(),
                     lambda_gf.coeff({k, l, 0}));
        }
    }

    return run.finish();
}

std::string verify_json(const VerifyOutcome& outcome) {
    nlohmann::ordered_json j;
    j["suite"] = outcome.suite;
    j["checks"] = outcome.checks;
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const auto& f : outcome.failures) {
        nlohmann::ordered_json e;
        e["check"] = f.check;
        e["expected"] = f.expected;
        e["got"] = f.got;
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    j["elapsed_ms"] = outcome.elapsed_ms;
    return j.dump(2);
}

void verify_print_text(std::ostream& os, const VerifyOutcome& outcome) {
    os << "suite " << outcome.suite << ": " << outcome.checks << " checks, "
       << outcome.failures.size() << " failures (" << outcome.elapsed_ms << " ms)\n";
    for (const auto& f : outcome.failures)
        os << "  FAIL " << f.check << ": expected " << f.expected << ", got " << f.got << "\n";
}

} // namespace parkfun
