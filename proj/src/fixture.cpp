#include "parkfun/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace parkfun {

namespace {

struct RowData {
    int n, s;
    std::vector<long long> cells; // l = 1..s
    long long total;              // printed total, kept separate from the cells on purpose
};

/* Transcribed once; the zero sentinel at l = s+1 is part of the printed table. */
const std::vector<RowData>& rows() {
    static const std::vector<RowData> data = {
        {1, 1, {1}, 1},
        {2, 1, {1}, 1},
        {2, 2, {2, 1}, 3},
        {3, 1, {1}, 1},
        {3, 2, {4, 3}, 7},
        {3, 3, {8, 5, 3}, 16},
        {4, 1, {1}, 1},
        {4, 2, {8, 7}, 15},
        {4, 3, {26, 19, 16}, 61},
        {4, 4, {50, 34, 25, 16}, 125},
        {5, 1, {1}, 1},
        {5, 2, {16, 15}, 31},
        {5, 3, {80, 65, 61}, 206},
        {5, 4, {232, 171, 143, 125}, 671},
        {5, 5, {432, 307, 243, 189, 125}, 1296},
        {6, 1, {1}, 1},
        {6, 2, {32, 31}, 63},
        {6, 3, {242, 211, 206}, 659},
        {6, 4, {982, 776, 701, 671}, 3130},
        {6, 5, {2642, 1971, 1666, 1456, 1296}, 9031},
        {6, 6, {4802, 3506, 2881, 2401, 1921, 1296}, 16807},
        {7, 1, {1}, 1},
        {7, 2, {64, 63}, 127},
        {7, 3, {728, 665, 659}, 2052},
        {7, 4, {4020, 3361, 3175, 3130}, 13686},
        {7, 5, {14392, 11262, 10026, 9351, 9031}, 54062},
        {7, 6, {36724, 27693, 23667, 20922, 18682, 16807}, 144495},
        {7, 7, {65536, 48729, 40953, 35328, 30208, 24583, 16807}, 262144},
    };
    return data;
}

int sort_l(int l) { return l == FixtureCell::kTotal ? 1 << 20 : l; }

} // namespace

const std::vector<FixtureCell>& golden_cells() {
    static const std::vector<FixtureCell> cells = [] {
        std::vector<FixtureCell> out;
        for (const auto& row : rows()) {
            for (int l = 1; l <= row.s; ++l)
                out.push_back({row.n, row.s, l, row.cells[l - 1]});
            out.push_back({row.n, row.s, row.s + 1, 0}); // printed zero sentinel
            out.push_back({row.n, row.s, FixtureCell::kTotal, row.total});
        }
        return out;
    }();
    return cells;
}

std::string cells_to_csv(const std::vector<FixtureCell>& cells) {
    std::vector<FixtureCell> sorted = cells;
    std::sort(sorted.begin(), sorted.end(), [](const FixtureCell& a, const FixtureCell& b) {
        if (a.n != b.n)
            return a.n < b.n;
        if (a.s != b.s)
            return a.s < b.s;
        return sort_l(a.l) < sort_l(b.l);
    });
    std::string out = "n,s,l,value\n";
    for (const auto& c : sorted) {
        out += std::to_string(c.n) + "," + std::to_string(c.s) + ",";
        out += (c.l == FixtureCell::kTotal) ? "TOTAL" : std::to_string(c.l);
        out += "," + c.value.str() + "\n";
    }
    return out;
}

const std::string& golden_csv() {
    static const std::string csv = cells_to_csv(golden_cells());
    return csv;
}

std::vector<FixtureCell> parse_fixture_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw FixtureError("fixture: empty input");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "n,s,l,value")
        throw FixtureError("fixture: bad header '" + line + "'");
    std::vector<FixtureCell> cells;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (fields.size() != 4)
            throw FixtureError("fixture line " + std::to_string(lineno) + ": expected 4 fields");
        try {
            FixtureCell cell;
            cell.n = std::stoi(fields[0]);
            cell.s = std::stoi(fields[1]);
            cell.l = (fields[2] == "TOTAL") ? FixtureCell::kTotal : std::stoi(fields[2]);
            cell.value = ExactInt(fields[3]);
            if (cell.n < 1 || cell.s < 1 || cell.s > cell.n ||
                (cell.l != FixtureCell::kTotal && cell.l < 1) || cell.value < 0)
                throw FixtureError("fixture line " + std::to_string(lineno) + ": out of range");
            cells.push_back(std::move(cell));
        } catch (const FixtureError&) {
            throw;
        } catch (const std::exception&) {
            throw FixtureError("fixture line " + std::to_string(lineno) + ": parse failure");
        }
    }
    if (cells.empty())
        throw FixtureError("fixture: no data rows");
    return cells;
}

std::vector<FixtureCell> load_fixture_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FixtureError("fixture file not readable: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture_csv(buf.str());
}

} // namespace parkfun
