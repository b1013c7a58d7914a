#include "parkfun/parking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parkfun {

namespace {

void check_entries(const PreferenceSet& prefs) {
    for (int a : prefs)
        if (a <= 0)
            throw std::invalid_argument("preference entries must be >= 1");
}

/* next_free[i] = smallest unoccupied space >= i, with path compression. */
int find_free(std::vector<int>& next_free, int i) {
    int root = i;
    while (next_free[root] != root)
        root = next_free[root];
    while (next_free[i] != root) {
        int up = next_free[i];
        next_free[i] = root;
        i = up;
    }
    return root;
}

} // namespace

ParkOutcome park(const PreferenceSet& prefs, int spaces) {
    if (spaces < 0)
        throw std::invalid_argument("park: spaces must be >= 0");
    check_entries(prefs);

    ParkOutcome out;
    out.assignment.assign(prefs.size(), 0);
    // next_free over [1, spaces+1]; spaces+1 is the "drove past" sink
    std::vector<int> next_free(spaces + 2);
    std::iota(next_free.begin(), next_free.end(), 0);
    for (std::size_t i = 0; i < prefs.size(); ++i) {
        int a = prefs[i];
        if (a > spaces) {
            ++out.unparked;
            continue;
        }
        int spot = find_free(next_free, a);
        if (spot > spaces) {
            ++out.unparked;
            continue;
        }
        out.assignment[i] = spot;
        next_free[spot] = spot + 1;
        out.occupied.push_back(spot);
    }
    std::sort(out.occupied.begin(), out.occupied.end());
    return out;
}

int flaw_count(const PreferenceSet& prefs, int spaces) {
    check_entries(prefs);
    if (spaces <= 64 && !prefs.empty())
        return flaw_count_bits(prefs.data(), static_cast<int>(prefs.size()), spaces);
    return park(prefs, spaces).unparked;
}

bool is_parking_function(const PreferenceSet& prefs) {
    check_entries(prefs);
    PreferenceSet sorted = prefs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] > static_cast<int>(i) + 1)
            return false;
    return true;
}

ClassRecord classify(const PreferenceSet& prefs, int spaces) {
    ClassRecord rec;
    rec.flaws = flaw_count(prefs, spaces);
    if (!prefs.empty()) {
        rec.leading = prefs.front();
        rec.max_entry = *std::max_element(prefs.begin(), prefs.end());
    }
    rec.is_parking_function = rec.flaws == 0;
    return rec;
}

void require_within_budget(int n, int s, const ExactInt& budget) {
    if (n < 0 || s < 1)
        throw std::invalid_argument("enumeration requires n >= 0, s >= 1");
    ExactInt total = ipow(s, static_cast<unsigned long>(n));
    if (total > budget)
        throw BudgetError(total);
}

PreferenceSetEnumerator::PreferenceSetEnumerator(int n, int s, const ExactInt& budget)
    : n_(n), s_(s) {
    require_within_budget(n, s, budget);
    digits_.assign(n, 1);
}

void PreferenceSetEnumerator::advance() {
    for (int i = n_ - 1; i >= 0; --i) {
        if (digits_[i] < s_) {
            ++digits_[i];
            std::fill(digits_.begin() + i + 1, digits_.end(), 1);
            return;
        }
    }
    done_ = true;
}

} // namespace parkfun
