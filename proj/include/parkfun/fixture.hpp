#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "parkfun/exact.hpp"

namespace parkfun {

/* One line of the golden table: l in [1, s+1] is a leading-term cell
   (the l = s+1 cell is the printed zero sentinel); l = kTotal is the
   p_{n;<=s} row total. */
struct FixtureCell {
    static constexpr int kTotal = -1;
    int n = 0;
    int s = 0;
    int l = 0;
    ExactInt value;

    bool operator==(const FixtureCell&) const = default;
};

/* Hand-transcribed appendix table for n <= 7; read-only golden data. */
const std::vector<FixtureCell>& golden_cells();
const std::string& golden_csv();

/* Canonical CSV: header n,s,l,value; sorted by (n, s, l numeric, TOTAL
   last); LF endings; no trailing whitespace. */
std::string cells_to_csv(const std::vector<FixtureCell>& cells);

/* Throws FixtureError on malformed input. */
std::vector<FixtureCell> parse_fixture_csv(const std::string& text);
std::vector<FixtureCell> load_fixture_file(const std::string& path);

struct FixtureMismatch {
    FixtureCell expected; // from the fixture
    ExactInt got;
};

} // namespace parkfun
