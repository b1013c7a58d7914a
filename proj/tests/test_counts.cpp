#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "parkfun/counts.hpp"

using namespace parkfun;

namespace {
CountEngine& eng() {
    static CountEngine engine;
    return engine;
}
} // namespace

TEST_CASE("all: (n+1)^{n-1}") {
    CHECK(eng().all(0) == 1);
    CHECK(eng().all(3) == 16);
    CHECK(eng().all(7) == 262144);
    CHECK(eng().all(8, Method::Oracle) == eng().all(8));
}

TEST_CASE("riordan formula") {
    CHECK(eng().riordan(2, 3) == 8);
    CHECK(eng().riordan(2, 3, Method::Oracle) == 8);
    CHECK(eng().riordan(4, 4) == 125);
    CHECK(eng().riordan(0, 5) == 1);
    CHECK_THROWS_AS(eng().riordan(5, 4), std::invalid_argument);
}

TEST_CASE("surplus routes") {
    CHECK(eng().surplus_composition(2, 1) == 8);
    CHECK(eng().surplus_recurrence(2, 1) == 8);
    CHECK(eng().surplus_recurrence(1, 1) == 2);
    CHECK(eng().surplus_composition(4, 0) == eng().all(4));
    CHECK(eng().surplus_composition(0, 3) == 1);
    CHECK(eng().surplus_recurrence(0, 3) == 1);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 4; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            ExactInt expected = eng().riordan(n, n + k);
            CHECK(eng().surplus_composition(n, k) == expected);
            CHECK(eng().surplus_recurrence(n, k) == expected);
        }
}

TEST_CASE("flaw_complete") {
    CHECK(eng().flaw_complete(3, 2) == 7);
    CHECK(eng().flaw_complete(5, 5) == eng().all(5));
    CHECK(eng().flaw_complete(7, 3) == 2052);
    CHECK(eng().flaw_complete(4, 0) == 0);
    CHECK(eng().flaw_complete(0, 0) == 1);
    CHECK_THROWS_AS(eng().flaw_complete(3, 4), std::invalid_argument);
    for (int n = 1; n <= 5; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(eng().flaw_complete(n, m) == eng().flaw_complete(n, m, Method::Oracle));
}

TEST_CASE("le: pinned values and conventions") {
    CHECK(eng().le(4, 3) == 61);
    CHECK(eng().le(7, 3) == 2052);
    CHECK(eng().le(5, 1) == 1);
    CHECK(eng().le(6, 4) == 3130);
    CHECK(eng().le(0, 0) == 1);
    CHECK(eng().le(3, 0) == 0);
    CHECK_THROWS_AS(eng().le(3, 4), std::invalid_argument); // s > n rejected
}

TEST_CASE("le: all five methods agree") {
    for (int n = 0; n <= 7; ++n)
        for (int s = 0; s <= n; ++s) {
            CAPTURE(n);
            CAPTURE(s);
            ExactInt f = eng().le(n, s, Method::Formula);
            CHECK(eng().le(n, s, Method::RecurrenceA) == f);
            CHECK(eng().le(n, s, Method::RecurrenceB) == f);
            if (n <= 6) {
                CHECK(eng().le(n, s, Method::Oracle) == f);
                CHECK(eng().le(n, s, Method::Series) == f);
            }
        }
}

TEST_CASE("eq: difference route equals its recurrence") {
    CHECK(eng().eq(4, 4) == 64);
    CHECK(eng().eq(3, 2) == 6);
    CHECK(eng().eq(1, 1) == 1);
    CHECK_THROWS_AS(eng().eq(3, 0), std::invalid_argument);
    for (int n = 1; n <= 7; ++n)
        for (int s = 1; s <= n; ++s) {
            CAPTURE(n);
            CAPTURE(s);
            ExactInt f = eng().eq(n, s);
            CHECK(eng().eq(n, s, Method::RecurrenceA) == f);
            if (n <= 6)
                CHECK(eng().eq(n, s, Method::Oracle) == f);
        }
}

TEST_CASE("lead: Eu telescoping") {
    CHECK(eng().lead(4, 1) == 50);
    CHECK(eng().lead(4, 2) == 34);
    CHECK(eng().lead(7, 3) == 40953);
    CHECK(eng().lead(1, 1) == 1);
    CHECK_THROWS_AS(eng().lead(3, 4), std::invalid_argument);
    for (int n = 1; n <= 7; ++n) {
        CHECK(eng().lead(n, n) == eng().all(n - 1));
        if (n <= 6)
            for (int l = 1; l <= n; ++l)
                CHECK(eng().lead(n, l, Method::Oracle) == eng().lead(n, l));
    }
}

TEST_CASE("le_lead: closed formula, both recurrences, oracle") {
    CHECK(eng().le_lead(7, 6, 3) == 23667);
    CHECK(eng().le_lead(6, 6, 3) == 2881);
    CHECK(eng().le_lead(5, 4, 4) == 125);
    CHECK(eng().le_lead(5, 4, 4) == eng().le(4, 4));
    CHECK(eng().le_lead(6, 1, 1) == 1);
    CHECK_THROWS_AS(eng().le_lead(5, 3, 4), std::invalid_argument); // l > s rejected

    for (int n = 1; n <= 6; ++n)
        for (int s = 1; s <= n; ++s)
            for (int l = 1; l <= s; ++l) {
                CAPTURE(n);
                CAPTURE(s);
                CAPTURE(l);
                ExactInt f = eng().le_lead(n, s, l);
                CHECK(eng().le_lead(n, s, l, Method::RecurrenceA) == f);
                CHECK(eng().le_lead(n, s, l, Method::RecurrenceB) == f);
                if (n <= 5) {
                    CHECK(eng().le_lead(n, s, l, Method::Oracle) == f);
                    CHECK(eng().le_lead(n, s, l, Method::Series) == f);
                }
            }
}

TEST_CASE("eq_lead: difference route equals its recurrence") {
    CHECK(eng().eq_lead(5, 5, 5) == 125);
    CHECK(eng().eq_lead(4, 3, 2) == 12);
    CHECK(eng().eq_lead(1, 1, 1) == 1);
    CHECK_THROWS_AS(eng().eq_lead(4, 2, 3), std::invalid_argument);
    for (int n = 1; n <= 6; ++n)
        for (int s = 1; s <= n; ++s)
            for (int l = 1; l <= s; ++l) {
                CAPTURE(n);
                CAPTURE(s);
                CAPTURE(l);
                ExactInt f = eng().eq_lead(n, s, l);
                CHECK(eng().eq_lead(n, s, l, Method::RecurrenceA) == f);
                if (n <= 5)
                    CHECK(eng().eq_lead(n, s, l, Method::Oracle) == f);
            }
}

TEST_CASE("row sums and column telescopes") {
    for (int n = 1; n <= 7; ++n) {
        ExactInt column = 0;
        for (int s = 1; s <= n; ++s) {
            column += eng().eq(n, s);
            CHECK(column == eng().le(n, s));
            ExactInt row = 0;
            for (int l = 1; l <= s; ++l)
                row += eng().le_lead(n, s, l);
            CHECK(row == eng().le(n, s));
        }
    }
}

TEST_CASE("abel identity with signed bases") {
    for (int n = 1; n <= 10; ++n)
        for (int s = 1; s <= 12; ++s) {
            ExactInt sum = 0;
            for (int i = 0; i <= n; ++i)
                sum += binomial(n, i) * pow_conv(i + 1, i - 1) *
                       ipow(s - i - 1, static_cast<unsigned long>(n - i));
            CHECK(sum == ipow(s, static_cast<unsigned long>(n)));
        }
}

TEST_CASE("memoized recurrences are safe under concurrent callers") {
    CountEngine shared;
    CountEngine reference;
    std::vector<std::thread> workers;
    std::vector<int> bad(4, 0);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&shared, &bad, t] {
            for (int n = 1; n <= 7; ++n)
                for (int s = 1; s <= n; ++s)
                    for (int l = 1; l <= s; ++l)
                        if (shared.le_lead(n, s, l, Method::RecurrenceA) !=
                            shared.le_lead(n, s, l, Method::RecurrenceB))
                            ++bad[t];
        });
    for (auto& w : workers)
        w.join();
    for (int t = 0; t < 4; ++t)
        CHECK(bad[t] == 0);
    for (int n = 1; n <= 7; ++n)
        for (int s = 1; s <= n; ++s)
            for (int l = 1; l <= s; ++l)
                CHECK(shared.le_lead(n, s, l, Method::RecurrenceA) ==
                      reference.le_lead(n, s, l, Method::RecurrenceA));
}

TEST_CASE("counts scale to convergence-sized inputs") {
    // smoke: the alternating formula and recurrence B handle n in the hundreds
    ExactInt le_big = eng().le(400, 395);
    CHECK(le_big > 0);
    ExactInt lead_big = eng().le_lead(400, 396, 3, Method::RecurrenceB);
    CHECK(lead_big > 0);
    CHECK(le_big < ipow(401, 399));
    CHECK(lead_big < ipow(401, 398));
}
