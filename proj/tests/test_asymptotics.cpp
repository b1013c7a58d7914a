#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parkfun/asymptotics.hpp"

using namespace parkfun;
using Rat = ExactRational;

TEST_CASE("mu closed form") {
    CHECK(mu(0) == EInvPoly(1));
    CHECK(mu(1) == EInvPoly(1) - EInvPoly::t_power(1));
    EInvPoly mu2 = EInvPoly(1) - EInvPoly::t_power(1, 2) + EInvPoly::t_power(2, Rat(1) / 2);
    CHECK(mu(2) == mu2);
    for (int k = 0; k <= 20; ++k)
        CHECK(mu_closed(k) == mu_recurrence(k));
}

TEST_CASE("eta") {
    CHECK(eta(0) == EInvPoly::t_power(1));
    CHECK(eta(1) == mu(1) - mu(2));
    for (int k = 0; k <= 20; ++k)
        CHECK(eta(k) == eta_sum_identity(k));
    // telescoping
    EInvPoly acc;
    for (int k = 0; k <= 12; ++k) {
        acc = acc + eta(k);
        CHECK(acc == EInvPoly(1) - mu(k + 1));
    }
}

TEST_CASE("tau") {
    CHECK(tau(1) == EInvPoly(2));
    CHECK(tau(2) == EInvPoly(2) - EInvPoly::t_power(1));
    CHECK(tau(3) == EInvPoly(2) - EInvPoly::t_power(1) - EInvPoly::t_power(2));
    CHECK_THROWS_AS(tau(0), std::invalid_argument);
    for (int l = 1; l <= 12; ++l)
        CHECK(tau(l).degree() == l - 1);
}

TEST_CASE("rho and lambda") {
    CHECK(rho(1, 0) == EInvPoly(2));
    CHECK(rho(1, 1) == EInvPoly(2) * (EInvPoly(1) - EInvPoly::t_power(1)));
    for (int l = 1; l <= 10; ++l) {
        CHECK(rho(l, 0) == tau(l));
        for (int k = 0; k <= 10; ++k) {
            CHECK(rho_closed(l, k) == rho_recurrence(l, k));
            CHECK(rho_closed(l, k) == tau(l) * mu(k));
            CHECK(lambda_const(l, k) == lambda_difference(l, k));
        }
    }
    CHECK(lambda_const(1, 0) == EInvPoly::t_power(1, 2));
    CHECK(lambda_const(2, 0) ==
          EInvPoly::t_power(1, 2) - EInvPoly::t_power(2)); // t*(2 - t)
    // lambda telescopes to rho(l,0) - rho(l,K+1)
    for (int l = 1; l <= 4; ++l) {
        EInvPoly acc;
        for (int k = 0; k <= 8; ++k)
            acc = acc + lambda_const(l, k);
        CHECK(acc == rho(l, 0) - rho(l, 9));
    }
}

TEST_CASE("asymptotic generating functions match the constants") {
    auto mu_gf = asym_gf(AsymFamily::Mu, 8);
    auto eta_gf = asym_gf(AsymFamily::Eta, 8);
    auto tau_gf = asym_gf(AsymFamily::Tau, 8);
    for (int k = 0; k <= 8; ++k) {
        CHECK(mu_gf.coeff({k, 0, 0}) == mu(k));
        CHECK(eta_gf.coeff({k, 0, 0}) == eta(k));
        CHECK(tau_gf.coeff({k, 0, 0}) == (k >= 1 ? tau(k) : EInvPoly()));
    }
    auto rho_gf = asym_gf(AsymFamily::Rho, 5, 5);
    auto lambda_gf = asym_gf(AsymFamily::Lambda, 5, 5);
    for (int k = 0; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l) {
            CHECK(rho_gf.coeff({k, l, 0}) == rho(l, k));
            CHECK(lambda_gf.coeff({k, l, 0}) == lambda_const(l, k));
        }
}

TEST_CASE("eval_einv") {
    CHECK(eval_einv(EInvPoly(1) - EInvPoly::t_power(1), 6) == "0.632121");
    CHECK(eval_einv(EInvPoly(), 6) == "0.000000");
    CHECK(eval_einv(EInvPoly(2), 6) == "2.000000");
    // 30-digit value of 1 - 1/e
    CHECK(eval_einv(EInvPoly(1) - EInvPoly::t_power(1), 30) ==
          "0.632120558828557678404476229839");
    CHECK_THROWS_AS(eval_einv(EInvPoly(1), 0), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(decimal_string(Rat(1) / 8, 2) == "0.12");
    CHECK(decimal_string(Rat(3) / 8, 2) == "0.38");
    CHECK(decimal_string(Rat(1) / 4, 1) == "0.2");
    CHECK(decimal_string(Rat(3) / 4, 1) == "0.8");
    CHECK(decimal_string(Rat(-1) / 3, 4) == "-0.3333");
    CHECK(decimal_string(Rat(5), 3) == "5.000");
    CHECK(decimal_string(Rat(-1) / 100000, 2) == "0.00"); // rounds away the sign
}

TEST_CASE("einv_approx is rigorous") {
    Rat bound(1, 1000000);
    Rat t = einv_approx(bound);
    // compare against a much tighter approximation
    Rat tight = einv_approx(Rat(1, ExactInt("1000000000000000000000")));
    CHECK(boost::multiprecision::abs(t - tight) <= bound);
}

TEST_CASE("convergence reports") {
    CountEngine eng;
    SUBCASE("mu_0 ratio is exactly 1") {
        auto rep = convergence_report(AsymFamily::Mu, -1, 0, {10, 100}, 30, eng);
        for (const auto& s : rep.samples)
            CHECK(s.error == 0);
    }
    SUBCASE("tau_1 ratio is exactly 2") {
        auto rep = convergence_report(AsymFamily::Tau, 1, -1, {10, 50}, 30, eng);
        for (const auto& s : rep.samples)
            CHECK(s.error == 0);
    }
    SUBCASE("mu_1 errors decrease") {
        auto rep = convergence_report(AsymFamily::Mu, -1, 1, {50, 100, 200}, 30, eng);
        REQUIRE(rep.samples.size() == 3);
        CHECK(rep.samples[0].error > rep.samples[1].error);
        CHECK(rep.samples[1].error > rep.samples[2].error);
    }
    SUBCASE("json shape") {
        auto rep = convergence_report(AsymFamily::Rho, 2, 1, {20, 40}, 12, eng);
        std::string json = convergence_json(rep);
        CHECK(json.find("\"family\": \"rho\"") != std::string::npos);
        CHECK(json.find("\"limit_poly\"") != std::string::npos);
        CHECK(json.find("\"samples\"") != std::string::npos);
    }
    SUBCASE("validity thresholds enforced") {
        CHECK_THROWS_AS(convergence_report(AsymFamily::Mu, -1, 5, {6}, 30, eng),
                        std::invalid_argument);
    }
}
