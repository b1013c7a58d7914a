#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parkfun/exact.hpp"
#include "parkfun/parking.hpp"

namespace parkfun {

/* One counting family: sequences in [1,s]^n parked against m spaces,
   optionally filtered by exact flaw count, leading term, and max entry.
   Any absent constraint means ANY. */
struct CountQuery {
    int n = 0;
    int m = 0;
    int s = 1;
    std::optional<int> flaws;
    std::optional<int> leading;
    std::optional<int> max_equals;
};

struct OracleOptions {
    ExactInt budget = kDefaultEnumerationBudget;
    bool parallel = true;
};

/* Exhaustive count; throws BudgetError when the sweep would exceed the
   budget, std::invalid_argument on a malformed query. */
ExactInt oracle_count(const CountQuery& q, const OracleOptions& opts = {});

/* Plain odometer + general park(); the reference the parallel kernel is
   tested against. */
ExactInt oracle_count_serial(const CountQuery& q, const ExactInt& budget = kDefaultEnumerationBudget);

/* One enumeration pass per n: every parking function of length n bucketed
   by (leading term, max entry). cell/total answer the (n, s, l) table. */
class LeadingMaxTable {
public:
    explicit LeadingMaxTable(int n_max);

    int n_max() const { return n_max_; }
    ExactInt cell(int n, int s, int l) const;  // |P_{n;<=s}^l|
    ExactInt total(int n, int s) const;        // p_{n;<=s}

    std::uint64_t& bucket(int n, int lead, int maxe) {
        return buckets_[n][(lead - 1) * n + (maxe - 1)];
    }
    std::uint64_t bucket(int n, int lead, int maxe) const {
        return buckets_[n][(lead - 1) * n + (maxe - 1)];
    }

private:
    int n_max_;
    std::vector<std::vector<std::uint64_t>> buckets_; // [n][lead-1][maxe-1] flattened
};

LeadingMaxTable oracle_table(int n_max, const OracleOptions& opts = {});

struct BijectionReport {
    std::string name;
    ExactInt domain_size = 0;
    ExactInt codomain_size = 0;
    bool is_bijection = false;
    std::optional<std::pair<PreferenceSet, PreferenceSet>> counterexample;
};

/* alpha in P_{n;<=s}  <=>  alpha parks against s spaces with exactly n-s flaws. */
BijectionReport verify_bijection_erase_spaces(int n, int s, const OracleOptions& opts = {});

/* (s, a_1..a_{n-1}) in P_{n;<=s}^s  <=>  (a_1..a_{n-1}) in P_{n-1;<=s}. */
BijectionReport verify_bijection_drop_leading(int n, int s, const OracleOptions& opts = {});

/* (1, b_1..b_{n-1}) in P_n^1  <=>  (b_1..b_{n-1}) parks with n spaces. */
BijectionReport verify_bijection_leading_one(int n, const OracleOptions& opts = {});

} // namespace parkfun
