#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "parkfun/parking.hpp"

using namespace parkfun;

TEST_CASE("park hand simulations") {
    auto out = park({1, 1, 1}, 2);
    CHECK(out.unparked == 1);
    CHECK(out.occupied == std::vector<int>{1, 2});

    out = park({}, 5);
    CHECK(out.unparked == 0);
    CHECK(out.occupied.empty());

    out = park({2, 1, 1}, 3);
    CHECK(out.unparked == 0);
    CHECK(out.occupied == std::vector<int>{1, 2, 3});
    CHECK(out.assignment == std::vector<int>{2, 1, 3});

    out = park({3, 3}, 3);
    CHECK(out.unparked == 1);
    CHECK(out.occupied == std::vector<int>{3});
}

TEST_CASE("park edge semantics") {
    // entries above m leave unparked
    CHECK(park({9, 1}, 3).unparked == 1);
    CHECK(park({1, 2}, 0).unparked == 2);
    CHECK_THROWS_AS(park({0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(park({-2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(is_parking_function({1, 0}), std::invalid_argument);
}

TEST_CASE("is_parking_function examples") {
    CHECK(is_parking_function({1, 2, 3}));
    CHECK_FALSE(is_parking_function({2, 2, 3}));
    CHECK(is_parking_function({3, 1, 1, 1}));
    CHECK(is_parking_function({}));
}

TEST_CASE("classify examples") {
    auto rec = classify({5, 1}, 5);
    CHECK(rec.flaws == 0);
    CHECK(rec.leading == 5);
    CHECK(rec.max_entry == 5);
    CHECK(rec.is_parking_function);

    rec = classify({1, 1, 1}, 2);
    CHECK(rec.flaws == 1);
    CHECK(rec.leading == 1);
    CHECK(rec.max_entry == 1);

    rec = classify({2, 2}, 2);
    CHECK(rec.flaws == 1);
    CHECK(rec.leading == 2);
    CHECK(rec.max_entry == 2);

    rec = classify({}, 4);
    CHECK(rec.flaws == 0);
    CHECK_FALSE(rec.leading.has_value());
    CHECK_FALSE(rec.max_entry.has_value());
}

TEST_CASE("enumeration is lexicographic and complete") {
    std::vector<PreferenceSet> got;
    for_each_preference_set(2, 2, [&](const PreferenceSet& p) { got.push_back(p); });
    std::vector<PreferenceSet> want = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(got == want);

    int empties = 0;
    for_each_preference_set(0, 3, [&](const PreferenceSet& p) {
        CHECK(p.empty());
        ++empties;
    });
    CHECK(empties == 1);

    got.clear();
    for_each_preference_set(3, 1, [&](const PreferenceSet& p) { got.push_back(p); });
    CHECK(got == std::vector<PreferenceSet>{{1, 1, 1}});

    // distinctness and count on a bigger instance
    std::set<PreferenceSet> seen;
    for_each_preference_set(4, 3, [&](const PreferenceSet& p) { seen.insert(p); });
    CHECK(seen.size() == 81);
}

TEST_CASE("enumeration budget refusal") {
    CHECK_THROWS_AS(for_each_preference_set(40, 10, [](const PreferenceSet&) {}),
                    BudgetError);
    try {
        for_each_preference_set(40, 10, [](const PreferenceSet&) {});
    } catch (const BudgetError& e) {
        CHECK(e.required == ipow(10, 40));
        CHECK(std::string(e.what()).find(e.required.str()) != std::string::npos);
    }
}

TEST_CASE("definition equivalence: sorted test vs park") {
    // exhaustive with entries allowed past n to cover the degenerate side
    for (int n = 0; n <= 5; ++n)
        for_each_preference_set(n, n + 1, [&](const PreferenceSet& p) {
            CAPTURE(p);
            CHECK(is_parking_function(p) == (park(p, n).unparked == 0));
        });
}

TEST_CASE("bitmask kernel agrees with reference park") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= n + 2; ++m)
            for_each_preference_set(n, n + 2, [&](const PreferenceSet& p) {
                CHECK(flaw_count_bits(p.data(), n, m) == park(p, m).unparked);
            });
}

TEST_CASE("park outcome invariants") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        int n = static_cast<int>(rng() % 8);
        int m = static_cast<int>(rng() % 9);
        PreferenceSet p(n);
        for (auto& a : p)
            a = static_cast<int>(rng() % 10) + 1;
        auto out = park(p, m);
        CHECK(static_cast<int>(out.occupied.size()) + out.unparked == n);
        std::set<int> seen;
        for (int space : out.occupied) {
            CHECK(space >= 1);
            CHECK(space <= m);
            CHECK(seen.insert(space).second);
        }
        // assignment is injective on parked cars and every car meets its preference
        std::set<int> assigned;
        for (int i = 0; i < n; ++i) {
            if (out.assignment[i] == 0)
                continue;
            CHECK(out.assignment[i] >= p[i]);
            CHECK(assigned.insert(out.assignment[i]).second);
        }
        CHECK(assigned == seen);
    }
}

TEST_CASE("unparked count is monotone") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng() % 9);
        int m = static_cast<int>(rng() % 10);
        PreferenceSet p(n);
        for (auto& a : p)
            a = static_cast<int>(rng() % 11) + 1;

        // non-increasing as spaces grow
        CHECK(park(p, m).unparked >= park(p, m + 1).unparked);

        // appending a car never lowers the flaw count
        PreferenceSet q = p;
        q.push_back(static_cast<int>(rng() % 11) + 1);
        CHECK(park(q, m).unparked >= park(p, m).unparked);
    }
}
