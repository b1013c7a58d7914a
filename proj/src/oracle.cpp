#include "parkfun/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace parkfun {

namespace {

int flaws_of(const int* a, int n, int m) {
    if (m <= 64)
        return flaw_count_bits(a, n, m);
    return park(PreferenceSet(a, a + n), m).unparked;
}

/* Cycle digits a[p..n) over [1,s]; a[0..p) is the caller's fixed prefix. */
std::uint64_t count_tails(int* a, int n, int p, int s, int m, const std::optional<int>& flaws) {
    for (int i = p; i < n; ++i)
        a[i] = 1;
    std::uint64_t cnt = 0;
    while (true) {
        int fl = flaws_of(a, n, m);
        if (!flaws || fl == *flaws)
            ++cnt;
        int i = n - 1;
        while (i >= p && a[i] == s) {
            a[i] = 1;
            --i;
        }
        if (i < p)
            break;
        ++a[i];
    }
    return cnt;
}

std::uint64_t sweep(int n, int s, int m, const std::optional<int>& flaws,
                    const std::optional<int>& leading, bool parallel) {
    if (n == 0)
        return (!flaws || *flaws == 0) ? 1 : 0;
    int p = std::min(2, n);
    long long prefixes = 1;
    for (int i = 0; i < p; ++i)
        prefixes *= s;
    std::uint64_t total = 0;
    if (parallel) {
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
        for (long long pi = 0; pi < prefixes; ++pi) {
            std::vector<int> a(n);
            long long t = pi;
            for (int i = p - 1; i >= 0; --i) {
                a[i] = static_cast<int>(t % s) + 1;
                t /= s;
            }
            if (leading && a[0] != *leading)
                continue;
            total += count_tails(a.data(), n, p, s, m, flaws);
        }
    } else {
        std::vector<int> a(n);
        for (long long pi = 0; pi < prefixes; ++pi) {
            long long t = pi;
            for (int i = p - 1; i >= 0; --i) {
                a[i] = static_cast<int>(t % s) + 1;
                t /= s;
            }
            if (leading && a[0] != *leading)
                continue;
            total += count_tails(a.data(), n, p, s, m, flaws);
        }
    }
    return total;
}

void validate(const CountQuery& q) {
    if (q.n < 0 || q.m < 0 || q.s < 1)
        throw std::invalid_argument("oracle: need n >= 0, m >= 0, s >= 1");
    if (q.flaws && *q.flaws < 0)
        throw std::invalid_argument("oracle: flaw count must be >= 0");
    if (q.leading && q.n < 1)
        throw std::invalid_argument("oracle: leading constraint requires n >= 1");
    if (q.leading && *q.leading < 1)
        throw std::invalid_argument("oracle: leading term must be >= 1");
    if (q.max_equals && *q.max_equals < 1)
        throw std::invalid_argument("oracle: max entry must be >= 1");
}

ExactInt count_with_bound(const CountQuery& q, int bound, const OracleOptions& opts) {
    if (bound <= 0)
        return q.n == 0 ? 1 : 0;
    if (q.leading && *q.leading > bound)
        return 0;
    require_within_budget(q.n, bound, opts.budget);
    return sweep(q.n, bound, q.m, q.flaws, q.leading, opts.parallel);
}

} // namespace

ExactInt oracle_count(const CountQuery& q, const OracleOptions& opts) {
    validate(q);
    if (q.max_equals) {
        int v = *q.max_equals;
        if (v > q.s || q.n == 0)
            return 0;
        // max = v  <=>  (entries <= v) minus (entries <= v-1)
        return count_with_bound(q, v, opts) - count_with_bound(q, v - 1, opts);
    }
    return count_with_bound(q, q.s, opts);
}

ExactInt oracle_count_serial(const CountQuery& q, const ExactInt& budget) {
    validate(q);
    require_within_budget(q.n, q.s, budget);
    ExactInt cnt = 0;
    for_each_preference_set(
        q.n, q.s,
        [&](const PreferenceSet& alpha) {
            if (q.leading && (alpha.empty() || alpha.front() != *q.leading))
                return;
            if (q.max_equals) {
                if (alpha.empty() || *std::max_element(alpha.begin(), alpha.end()) != *q.max_equals)
                    return;
            }
            if (q.flaws && park(alpha, q.m).unparked != *q.flaws)
                return;
            ++cnt;
        },
        budget);
    return cnt;
}

LeadingMaxTable::LeadingMaxTable(int n_max) : n_max_(n_max) {
    if (n_max < 1)
        throw std::invalid_argument("table: n_max must be >= 1");
    buckets_.resize(n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        buckets_[n].assign(static_cast<std::size_t>(n) * n, 0);
}

ExactInt LeadingMaxTable::cell(int n, int s, int l) const {
    if (n < 1 || n > n_max_ || s < 1 || s > n || l < 1)
        throw std::out_of_range("table cell out of range");
    if (l > n)
        return 0;
    std::uint64_t sum = 0;
    for (int maxe = 1; maxe <= s; ++maxe)
        sum += bucket(n, l, maxe);
    return sum;
}

ExactInt LeadingMaxTable::total(int n, int s) const {
    if (n < 1 || n > n_max_ || s < 1 || s > n)
        throw std::out_of_range("table total out of range");
    std::uint64_t sum = 0;
    for (int l = 1; l <= n; ++l)
        for (int maxe = 1; maxe <= s; ++maxe)
            sum += bucket(n, l, maxe);
    return sum;
}

LeadingMaxTable oracle_table(int n_max, const OracleOptions& opts) {
    LeadingMaxTable table(n_max);
    for (int n = 1; n <= n_max; ++n)
        require_within_budget(n, n, opts.budget);

    for (int n = 1; n <= n_max; ++n) {
        if (!opts.parallel) {
            // reference path: general park() on every sequence
            for_each_preference_set(
                n, n,
                [&](const PreferenceSet& alpha) {
                    if (park(alpha, n).unparked == 0)
                        ++table.bucket(n, alpha.front(),
                                       *std::max_element(alpha.begin(), alpha.end()));
                },
                opts.budget);
            continue;
        }
        int p = std::min(2, n);
        long long prefixes = 1;
        for (int i = 0; i < p; ++i)
            prefixes *= n;
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(static_cast<std::size_t>(n) * n, 0);
            std::vector<int> a(n);
#pragma omp for schedule(dynamic) nowait
            for (long long pi = 0; pi < prefixes; ++pi) {
                long long t = pi;
                for (int i = p - 1; i >= 0; --i) {
                    a[i] = static_cast<int>(t % n) + 1;
                    t /= n;
                }
                for (int i = p; i < n; ++i)
                    a[i] = 1;
                while (true) {
                    if (flaw_count_bits(a.data(), n, n) == 0) {
                        int maxe = *std::max_element(a.begin(), a.end());
                        ++local[static_cast<std::size_t>(a[0] - 1) * n + (maxe - 1)];
                    }
                    int i = n - 1;
                    while (i >= p && a[i] == n) {
                        a[i] = 1;
                        --i;
                    }
                    if (i < p)
                        break;
                    ++a[i];
                }
            }
#pragma omp critical
            {
                for (int lead = 1; lead <= n; ++lead)
                    for (int maxe = 1; maxe <= n; ++maxe)
                        table.bucket(n, lead, maxe) +=
                            local[static_cast<std::size_t>(lead - 1) * n + (maxe - 1)];
            }
        }
    }
    return table;
}

BijectionReport verify_bijection_erase_spaces(int n, int s, const OracleOptions& opts) {
    if (n < 1 || s < 1 || s > n)
        throw std::invalid_argument("erase-spaces bijection needs 1 <= s <= n");
    BijectionReport rep;
    rep.name = "erase_spaces(n=" + std::to_string(n) + ",s=" + std::to_string(s) + ")";
    bool mismatch = false;
    for_each_preference_set(
        n, s,
        [&](const PreferenceSet& alpha) {
            bool lhs = flaw_count(alpha, n) == 0;
            bool rhs = flaw_count(alpha, s) == n - s;
            if (lhs)
                ++rep.domain_size;
            if (rhs)
                ++rep.codomain_size;
            if (lhs != rhs && !mismatch) {
                mismatch = true;
                rep.counterexample = {alpha, alpha};
            }
        },
        opts.budget);
    rep.is_bijection = !mismatch && rep.domain_size == rep.codomain_size;
    return rep;
}

BijectionReport verify_bijection_drop_leading(int n, int s, const OracleOptions& opts) {
    if (n < 1 || s < 1 || s > n)
        throw std::invalid_argument("drop-leading bijection needs 1 <= s <= n");
    BijectionReport rep;
    rep.name = "drop_leading(n=" + std::to_string(n) + ",s=" + std::to_string(s) + ")";
    bool mismatch = false;
    for_each_preference_set(
        n - 1, s,
        [&](const PreferenceSet& tail) {
            PreferenceSet alpha;
            alpha.reserve(n);
            alpha.push_back(s);
            alpha.insert(alpha.end(), tail.begin(), tail.end());
            bool lhs = flaw_count(alpha, n) == 0;       // alpha in P_{n;<=s}^s
            bool rhs = flaw_count(tail, n - 1) == 0;    // tail in P_{n-1;<=s}
            if (lhs)
                ++rep.domain_size;
            if (rhs)
                ++rep.codomain_size;
            if (lhs != rhs && !mismatch) {
                mismatch = true;
                rep.counterexample = {alpha, tail};
            }
        },
        opts.budget);
    rep.is_bijection = !mismatch && rep.domain_size == rep.codomain_size;
    return rep;
}

BijectionReport verify_bijection_leading_one(int n, const OracleOptions& opts) {
    if (n < 1)
        throw std::invalid_argument("leading-one bijection needs n >= 1");
    BijectionReport rep;
    rep.name = "leading_one(n=" + std::to_string(n) + ")";
    bool mismatch = false;
    for_each_preference_set(
        n - 1, n,
        [&](const PreferenceSet& tail) {
            PreferenceSet alpha;
            alpha.reserve(n);
            alpha.push_back(1);
            alpha.insert(alpha.end(), tail.begin(), tail.end());
            bool lhs = flaw_count(alpha, n) == 0; // alpha in P_n^1
            bool rhs = flaw_count(tail, n) == 0;  // tail in P_{n-1,n;<=n}
            if (lhs)
                ++rep.domain_size;
            if (rhs)
                ++rep.codomain_size;
            if (lhs != rhs && !mismatch) {
                mismatch = true;
                rep.counterexample = {alpha, tail};
            }
        },
        opts.budget);
    rep.is_bijection = !mismatch && rep.domain_size == rep.codomain_size;
    return rep;
}

} // namespace parkfun
