#include "parkfun/counts.hpp"

#include <functional>
#include <stdexcept>

#include "parkfun/genfun.hpp"

namespace parkfun {

namespace {

void reject(const std::string& what) { throw std::invalid_argument(what); }

ExactInt p_all(int n) {
    if (n < 0)
        reject("n must be >= 0");
    return pow_conv(n + 1, n - 1);
}

/* Build the family's generating function at just-large-enough caps and
   pull one coefficient. */
ExactInt series_value(GfName name, int n, int k, int s = -1) {
    SeriesCaps caps{n, 0, 0};
    if (gf_arity(name) == 2)
        caps.ny = k;
    if (gf_arity(name) == 3) {
        caps.ny = std::max(s, 0);
        caps.nz = k;
    }
    return count_from_gf(build_gf_closed(name, caps), name, n, k, s);
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
    case Method::Formula: return "formula";
    case Method::RecurrenceA: return "rec-a";
    case Method::RecurrenceB: return "rec-b";
    case Method::Oracle: return "oracle";
    case Method::Series: return "series";
    }
    return "?";
}

ExactInt CountEngine::all(int n, Method method) {
    if (n < 0)
        reject("all: n must be >= 0");
    switch (method) {
    case Method::Formula:
        return p_all(n);
    case Method::Oracle:
        return oracle_count({n, n, std::max(n, 1), 0, {}, {}}, oracle_opts);
    case Method::Series:
        return series_value(GfName::Q, n, 0);
    default:
        reject("all: method not defined for this family");
    }
    return 0;
}

ExactInt CountEngine::riordan(int n, int m, Method method) {
    if (n < 0 || m < n)
        reject("riordan: need 0 <= n <= m");
    switch (method) {
    case Method::Formula:
        if (n == 0)
            return 1; // empty preference set
        return ExactInt(m - n + 1) * ipow(m + 1, static_cast<unsigned long>(n - 1));
    case Method::Oracle:
        return oracle_count({n, m, std::max(m, 1), 0, {}, {}}, oracle_opts);
    case Method::Series:
        return series_value(GfName::Q, n, m - n);
    default:
        reject("riordan: method not defined for this family");
    }
    return 0;
}

ExactInt CountEngine::surplus(int n, int k, Method method) {
    if (n < 0 || k < 0)
        reject("surplus: need n >= 0, k >= 0");
    switch (method) {
    case Method::Formula: {
        // sum over weak compositions r_0+...+r_k = n, peeled one part at a time
        std::function<ExactInt(int, int)> comp = [&](int left, int parts) -> ExactInt {
            if (parts == 1)
                return pow_conv(left + 1, left - 1);
            ExactInt total = 0;
            for (int r = 0; r <= left; ++r)
                total += binomial(left, r) * pow_conv(r + 1, r - 1) * comp(left - r, parts - 1);
            return total;
        };
        return comp(n, k + 1);
    }
    case Method::RecurrenceA:
        return surplus_rec(n, k);
    case Method::Oracle:
        return oracle_count({n, n + k, std::max(n + k, 1), 0, {}, {}}, oracle_opts);
    case Method::Series:
        return series_value(GfName::Q, n, k);
    default:
        reject("surplus: method not defined for this family");
    }
    return 0;
}

ExactInt CountEngine::surplus_rec(int n, int k) {
    if (k == 0)
        return p_all(n);
    MemoTable::Key key = {n, k, 0};
    if (auto hit = memo_surplus_.get(key))
        return *hit;
    // split at the last empty space; the sum genuinely runs to i = n
    ExactInt total = 0;
    for (int i = 0; i <= n; ++i)
        total += binomial(n, i) * p_all(i) * surplus_rec(n - i, k - 1);
    return memo_surplus_.put(key, std::move(total));
}

ExactInt CountEngine::flaw_complete(int n, int m, Method method) {
    if (n < 0 || m < 0 || m > n)
        reject("flaw-complete: need 0 <= m <= n");
    switch (method) {
    case Method::Formula: {
        ExactInt total = pow_conv(m, n);
        for (int i = 0; i <= m - 2; ++i)
            total -= binomial(n, i) * pow_conv(i + 1, i - 1) *
                     ipow(m - i - 1, static_cast<unsigned long>(n - i));
        return total;
    }
    case Method::Oracle:
        if (m == 0)
            return n == 0 ? 1 : 0; // no admissible entries
        return oracle_count({n, m, m, n - m, {}, {}}, oracle_opts);
    case Method::Series:
        // erase-spaces equivalence: p_{n,m;<=m;n-m} = p_{n;<=m}
        return series_value(GfName::R, n, n - m);
    default:
        reject("flaw-complete: method not defined for this family");
    }
    return 0;
}

ExactInt CountEngine::le(int n, int s, Method method) {
    if (n < 0 || s < 0 || s > n)
        reject("le: need 0 <= s <= n");
    switch (method) {
    case Method::Formula: {
        if (n == 0)
            return 1;
        if (s == 0)
            return 0;
        int k = n - s;
        ExactInt total = 0;
        for (int i = 0; i <= k + 1 && i <= n; ++i) {
            ExactInt term = binomial(n, i) * pow_conv(n - i + 1, n - i - 1) *
                            ipow(k + 1 - i, static_cast<unsigned long>(i));
            total += (i % 2 == 0) ? term : -term;
        }
        return total;
    }
    case Method::RecurrenceA:
        return le_rec_a(n, s);
    case Method::RecurrenceB:
        return le_rec_b(n, s);
    case Method::Oracle:
        if (s == 0)
            return n == 0 ? 1 : 0;
        return oracle_count({n, n, s, 0, {}, {}}, oracle_opts);
    case Method::Series:
        return series_value(GfName::R, n, n - s);
    }
    return 0;
}

ExactInt CountEngine::le_rec_a(int n, int s) {
    if (n == 0)
        return 1;
    if (s == 0)
        return 0;
    if (s == n)
        return p_all(n);
    MemoTable::Key key = {n, s, 0};
    if (auto hit = memo_le_a_.get(key))
        return *hit;
    ExactInt total = le_rec_a(n, s + 1);
    for (int i = 1; i <= n - s; ++i)
        total -= binomial(n, i) * le_rec_a(n - i, s);
    return memo_le_a_.put(key, std::move(total));
}

ExactInt CountEngine::le_rec_b(int n, int s) {
    if (n == 0)
        return 1;
    if (s == 0)
        return 0;
    if (s == n)
        return p_all(n);
    MemoTable::Key key = {n, s, 0};
    if (auto hit = memo_le_b_.get(key))
        return *hit;
    int k = n - s;
    ExactInt total = p_all(n);
    for (int i = 1; i <= k; ++i)
        total -= binomial(n, i) * ExactInt(k - i + 1) *
                 ipow(k + 1, static_cast<unsigned long>(i - 1)) * le_rec_b(n - i, s);
    return memo_le_b_.put(key, std::move(total));
}

ExactInt CountEngine::eq(int n, int s, Method method) {
    if (n < 1 || s < 1 || s > n)
        reject("eq: need 1 <= s <= n");
    switch (method) {
    case Method::Formula:
        return le(n, s, Method::Formula) - le(n, s - 1, Method::Formula);
    case Method::RecurrenceA:
        return eq_rec(n, s);
    case Method::Oracle:
        return oracle_count({n, n, s, 0, {}, s}, oracle_opts);
    case Method::Series:
        return series_value(GfName::H, n, n - s);
    default:
        reject("eq: method not defined for this family");
    }
    return 0;
}

ExactInt CountEngine::eq_rec(int n, int s) {
    if (s == n)
        return ipow(n, static_cast<unsigned long>(n - 1)); // p_{n;=n} = n^{n-1}
    MemoTable::Key key = {n, s, 0};
    if (auto hit = memo_eq_.get(key))
        return *hit;
    int k = n - s;
    ExactInt total = eq_rec(n, s + 1) + binomial(n, k + 1) * pow_conv(s, s - 2);
    for (int i = 1; i <= k; ++i)
        total -= binomial(n, i) * eq_rec(n - i, s);
    return memo_eq_.put(key, std::move(total));
}

ExactInt CountEngine::lead(int n, int l, Method method) {
    if (n < 1 || l < 1 || l > n)
        reject("lead: need 1 <= l <= n");
    switch (method) {
    case Method::Formula:
        return lead_formula(n, l);
    case Method::Oracle:
        return oracle_count({n, n, n, 0, l, {}}, oracle_opts);
    case Method::Series:
        return series_value(GfName::T, n, n - l);
    default:
        reject("lead: method not defined for this family");
    }
    return 0;
}

ExactInt CountEngine::lead_formula(int n, int l) {
    if (n == 1)
        return 1;
    // telescope down from p_n^1 = 2(n+1)^{n-2}
    ExactInt value = 2 * ipow(n + 1, static_cast<unsigned long>(n - 2));
    for (int j = 1; j < l; ++j)
        value -= binomial(n - 1, j - 1) * pow_conv(j, j - 2) *
                 ipow(n - j + 1, static_cast<unsigned long>(n - j - 1));
    return value;
}

ExactInt CountEngine::le_lead(int n, int s, int l, Method method) {
    if (n < 1 || l < 1 || l > s || s > n)
        reject("le-lead: need 1 <= l <= s <= n");
    switch (method) {
    case Method::Formula: {
        ExactInt total = ipow(s, static_cast<unsigned long>(n - 1));
        for (int i = 0; i <= l - 2; ++i)
            total -= binomial(n - 1, i) * p_all(i) *
                     ipow(s - i - 1, static_cast<unsigned long>(n - i - 1));
        for (int i = l; i <= s - 2; ++i)
            total -= binomial(n - 1, i - 1) * lead_formula(i, l) *
                     ipow(s - i - 1, static_cast<unsigned long>(n - i));
        return total;
    }
    case Method::RecurrenceA:
        return le_lead_rec_a(n, s, l);
    case Method::RecurrenceB:
        return le_lead_rec_b(n, s, l);
    case Method::Oracle:
        return oracle_count({n, n, s, 0, l, {}}, oracle_opts);
    case Method::Series:
        return series_value(GfName::F, n, n - s, n - l);
    }
    return 0;
}

ExactInt CountEngine::le_lead_rec_a(int n, int s, int l) {
    if (s == n)
        return lead_formula(n, l);
    MemoTable::Key key = {n, s, l};
    if (auto hit = memo_le_lead_a_.get(key))
        return *hit;
    ExactInt total = le_lead_rec_a(n, s + 1, l);
    for (int i = 1; i <= n - s; ++i)
        total -= binomial(n - 1, i) * le_lead_rec_a(n - i, s, l);
    return memo_le_lead_a_.put(key, std::move(total));
}

ExactInt CountEngine::le_lead_rec_b(int n, int s, int l) {
    if (s == n)
        return lead_formula(n, l);
    MemoTable::Key key = {n, s, l};
    if (auto hit = memo_le_lead_b_.get(key))
        return *hit;
    int k = n - s;
    ExactInt total = lead_formula(n, l);
    for (int i = 1; i <= k; ++i)
        total -= binomial(n - 1, i) * ExactInt(k - i + 1) *
                 ipow(k + 1, static_cast<unsigned long>(i - 1)) * le_lead_rec_b(n - i, s, l);
    return memo_le_lead_b_.put(key, std::move(total));
}

ExactInt CountEngine::eq_lead(int n, int s, int l, Method method) {
    if (n < 1 || l < 1 || l > s || s > n)
        reject("eq-lead: need 1 <= l <= s <= n");
    switch (method) {
    case Method::Formula: {
        ExactInt total = le_lead(n, s, l, Method::Formula);
        if (l <= s - 1)
            total -= le_lead(n, s - 1, l, Method::Formula);
        return total;
    }
    case Method::RecurrenceA:
        return eq_lead_rec(n, s, l);
    case Method::Oracle:
        return oracle_count({n, n, s, 0, l, s}, oracle_opts);
    case Method::Series:
        return series_value(GfName::D, n, n - s, n - l);
    default:
        reject("eq-lead: method not defined for this family");
    }
    return 0;
}

ExactInt CountEngine::eq_lead_rec(int n, int s, int l) {
    if (l == s)
        return s == n ? p_all(n - 1) : le(n - 1, s, Method::Formula);
    if (s == n) // p_{n;=n}^l = p_n^l - p_{n;<=n-1}^l
        return lead_formula(n, l) - le_lead_rec_b(n, n - 1, l);
    MemoTable::Key key = {n, s, l};
    if (auto hit = memo_eq_lead_.get(key))
        return *hit;
    int k = n - s;
    ExactInt total = eq_lead_rec(n, s + 1, l) + binomial(n - 1, k + 1) * lead_formula(n - k - 1, l);
    for (int i = 1; i <= k; ++i)
        total -= binomial(n - 1, i) * eq_lead_rec(n - i, s, l);
    return memo_eq_lead_.put(key, std::move(total));
}

CountEngine& default_count_engine() {
    static CountEngine engine;
    return engine;
}

} // namespace parkfun
