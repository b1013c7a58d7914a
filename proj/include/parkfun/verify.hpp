#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "parkfun/counts.hpp"
#include "parkfun/genfun.hpp"
#include "parkfun/oracle.hpp"

namespace parkfun {

struct CheckFailure {
    std::string check;
    std::string expected;
    std::string got;
};

struct VerifyOutcome {
    std::string suite;
    int checks = 0;
    std::vector<CheckFailure> failures;
    double elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
};

/* Closed forms, recurrences, conventions, Abel identity, row/column sums,
   worked examples; formula routes for n <= max_n, oracle agreement for
   n <= min(max_n, 7). */
VerifyOutcome verify_identities(int max_n, CountEngine& engine);

/* The erase-spaces, drop-leading (s < n and s = n) and leading-one
   bijections, as literal set facts. */
VerifyOutcome verify_bijections(int max_n, const OracleOptions& opts);

/* Route equality for every generating function, the structural series
   identities, and coefficient-to-count contracts. */
VerifyOutcome verify_series(const SeriesCaps& caps, CountEngine& engine);

/* Symbolic suite: closed = recurrence, difference/sum identities,
   factorization, and series-coefficient agreement. */
VerifyOutcome verify_asymptotics(int max_kl, int series_cap);

std::string verify_json(const VerifyOutcome& outcome);
void verify_print_text(std::ostream& os, const VerifyOutcome& outcome);

} // namespace parkfun
