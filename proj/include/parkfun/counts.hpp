#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>

#include "parkfun/exact.hpp"
#include "parkfun/oracle.hpp"

namespace parkfun {

/* Every public count accepts a Method; all methods agree where defined,
   and a disagreement is never silently resolved. */
enum class Method { Formula, RecurrenceA, RecurrenceB, Oracle, Series };

const char* method_name(Method m);

/* Write-once cache; entries never change after insertion. Lookups and
   inserts are mutexed, computation happens outside the lock so recursive
   fills cannot deadlock. */
class MemoTable {
public:
    using Key = std::array<int, 3>;

    std::optional<ExactInt> get(const Key& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    ExactInt put(const Key& key, ExactInt value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = map_.emplace(key, std::move(value));
        return it->second; // first write wins
    }

private:
    mutable std::mutex mu_;
    std::map<Key, ExactInt> map_;
};

class CountEngine {
public:
    OracleOptions oracle_opts;

    /* p_n = (n+1)^{n-1}, p_0 = 1 */
    ExactInt all(int n, Method method = Method::Formula);

    /* p_{n,m;<=m} = (m-n+1)(m+1)^{n-1} for 0 <= n <= m */
    ExactInt riordan(int n, int m, Method method = Method::Formula);

    /* p_{n,n+k;<=n+k}: Formula = composition sum, RecurrenceA = split at
       the last empty space */
    ExactInt surplus(int n, int k, Method method = Method::Formula);
    ExactInt surplus_composition(int n, int k) { return surplus(n, k, Method::Formula); }
    ExactInt surplus_recurrence(int n, int k) { return surplus(n, k, Method::RecurrenceA); }

    /* p_{n,m;<=m;n-m} = m^n - sum_{i=0}^{m-2} C(n,i)(i+1)^{i-1}(m-i-1)^{n-i} */
    ExactInt flaw_complete(int n, int m, Method method = Method::Formula);

    /* p_{n;<=s}, 0 <= s <= n */
    ExactInt le(int n, int s, Method method = Method::Formula);

    /* p_{n;=s}, 1 <= s <= n: Formula = difference of le, RecurrenceA = its
       own recurrence anchored at p_{n;=n} = n^{n-1} */
    ExactInt eq(int n, int s, Method method = Method::Formula);

    /* p_n^l, 1 <= l <= n, telescoped from p_n^1 = 2(n+1)^{n-2} */
    ExactInt lead(int n, int l, Method method = Method::Formula);

    /* p_{n;<=s}^l, 1 <= l <= s <= n */
    ExactInt le_lead(int n, int s, int l, Method method = Method::Formula);

    /* p_{n;=s}^l, 1 <= l <= s <= n */
    ExactInt eq_lead(int n, int s, int l, Method method = Method::Formula);

private:
    ExactInt le_rec_a(int n, int s);
    ExactInt le_rec_b(int n, int s);
    ExactInt eq_rec(int n, int s);
    ExactInt lead_formula(int n, int l);
    ExactInt le_lead_rec_a(int n, int s, int l);
    ExactInt le_lead_rec_b(int n, int s, int l);
    ExactInt eq_lead_rec(int n, int s, int l);
    ExactInt surplus_rec(int n, int k);

    MemoTable memo_le_a_, memo_le_b_, memo_eq_, memo_le_lead_a_, memo_le_lead_b_,
        memo_eq_lead_, memo_surplus_;
};

/* Shared engine for callers that do not need isolated caches. */
CountEngine& default_count_engine();

} // namespace parkfun
