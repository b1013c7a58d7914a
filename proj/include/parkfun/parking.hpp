#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "parkfun/exact.hpp"

namespace parkfun {

/* A preference set (a_1,...,a_n): one desired space per car, entries >= 1.
   n = 0 (no cars) is valid. */
using PreferenceSet = std::vector<int>;

struct ParkOutcome {
    std::vector<int> assignment; // per car: final space in [1,m], or 0 if it drove past space m
    std::vector<int> occupied;   // sorted
    int unparked = 0;
};

struct ClassRecord {
    int flaws = 0;
    std::optional<int> leading;
    std::optional<int> max_entry;
    bool is_parking_function = false;
};

/* Cars are processed in order; car i takes the least unoccupied space >= a_i
   if one exists in [a_i, m], else it leaves unparked. Entries above m are
   legal and leave unparked. Rejects entries <= 0. */
ParkOutcome park(const PreferenceSet& prefs, int spaces);

/* Flaw count only; same semantics as park(). */
int flaw_count(const PreferenceSet& prefs, int spaces);

/* Allocation-free flaw count over a raw digit buffer, spaces <= 64.
   This is the kernel the enumeration sweeps run. */
inline int flaw_count_bits(const int* a, int n, int spaces) {
    std::uint64_t occ = 0;
    std::uint64_t full = (spaces >= 64) ? ~0ull : ((1ull << spaces) - 1);
    int unparked = 0;
    for (int i = 0; i < n; ++i) {
        int ai = a[i];
        if (ai > spaces) {
            ++unparked;
            continue;
        }
        std::uint64_t free = ~occ & full & ~((1ull << (ai - 1)) - 1);
        if (!free) {
            ++unparked;
            continue;
        }
        occ |= free & (~free + 1);
    }
    return unparked;
}

/* True iff the increasing rearrangement (b_1,...,b_n) satisfies b_i <= i;
   agrees with park(prefs, n).unparked == 0. */
bool is_parking_function(const PreferenceSet& prefs);

ClassRecord classify(const PreferenceSet& prefs, int spaces);

inline constexpr std::int64_t kDefaultEnumerationBudget = 1'000'000'000;

/* Throws BudgetError when s^n > budget. */
void require_within_budget(int n, int s, const ExactInt& budget);

/* Lexicographic odometer over [1,s]^n; yields exactly s^n sequences. */
class PreferenceSetEnumerator {
public:
    PreferenceSetEnumerator(int n, int s, const ExactInt& budget = kDefaultEnumerationBudget);

    bool done() const { return done_; }
    const PreferenceSet& current() const { return digits_; }
    void advance();

private:
    int n_, s_;
    bool done_ = false;
    PreferenceSet digits_;
};

template <class F>
void for_each_preference_set(int n, int s, F&& f,
                             const ExactInt& budget = kDefaultEnumerationBudget) {
    for (PreferenceSetEnumerator e(n, s, budget); !e.done(); e.advance())
        f(e.current());
}

} // namespace parkfun
