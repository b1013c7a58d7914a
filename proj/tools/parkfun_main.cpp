#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "parkfun/asymptotics.hpp"
#include "parkfun/counts.hpp"
#include "parkfun/fixture.hpp"
#include "parkfun/genfun.hpp"
#include "parkfun/verify.hpp"

namespace {

using namespace parkfun;

// exit codes are a stable contract
constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;
constexpr int kFixture = 4;

ExactInt budget_from_env() {
    const char* raw = std::getenv("PARKFUN_BUDGET");
    if (!raw)
        return kDefaultEnumerationBudget;
    try {
        ExactInt b(raw);
        if (b < 1)
            throw std::invalid_argument("");
        return b;
    } catch (const std::exception&) {
        throw std::invalid_argument("PARKFUN_BUDGET must be a positive integer");
    }
}

std::vector<FixtureCell> fixture_cells() {
    const char* path = std::getenv("PARKFUN_FIXTURE");
    if (path)
        return load_fixture_file(path);
    return golden_cells();
}

Method parse_method(const std::string& name) {
    if (name == "formula")
        return Method::Formula;
    if (name == "rec-a")
        return Method::RecurrenceA;
    if (name == "rec-b")
        return Method::RecurrenceB;
    if (name == "oracle")
        return Method::Oracle;
    if (name == "series")
        return Method::Series;
    throw std::invalid_argument("unknown method: " + name);
}

int require(const std::optional<int>& v, const char* flag) {
    if (!v)
        throw std::invalid_argument(std::string("missing required flag ") + flag);
    return *v;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    if (out.empty())
        throw std::invalid_argument("empty list");
    return out;
}

struct CountArgs {
    std::string family;
    std::string method = "formula";
    std::optional<int> n, m, s, k, l;
};

int run_count(const CountArgs& a, CountEngine& eng) {
    Method method = parse_method(a.method);
    int n = require(a.n, "--n");
    ExactInt value;
    if (a.family == "all")
        value = eng.all(n, method);
    else if (a.family == "riordan")
        value = eng.riordan(n, require(a.m, "--m"), method);
    else if (a.family == "surplus")
        value = eng.surplus(n, require(a.k, "--k"), method);
    else if (a.family == "flaw")
        value = eng.flaw_complete(n, require(a.m, "--m"), method);
    else if (a.family == "le")
        value = eng.le(n, require(a.s, "--s"), method);
    else if (a.family == "eq")
        value = eng.eq(n, require(a.s, "--s"), method);
    else if (a.family == "lead")
        value = eng.lead(n, require(a.l, "--l"), method);
    else if (a.family == "le-lead")
        value = eng.le_lead(n, require(a.s, "--s"), require(a.l, "--l"), method);
    else if (a.family == "eq-lead")
        value = eng.eq_lead(n, require(a.s, "--s"), require(a.l, "--l"), method);
    else
        throw std::invalid_argument("unknown family: " + a.family);
    std::cout << value.str() << "\n";
    return kOk;
}

struct TableArgs {
    int max_n = 7;
    bool check = false;
    std::string format = "text";
};

std::vector<FixtureCell> generate_table_cells(int max_n, const OracleOptions& opts) {
    LeadingMaxTable table = oracle_table(max_n, opts);
    std::vector<FixtureCell> cells;
    for (int n = 1; n <= max_n; ++n)
        for (int s = 1; s <= n; ++s) {
            // l = s+1 is the zero sentinel the printed table carries
            for (int l = 1; l <= s + 1; ++l)
                cells.push_back({n, s, l, table.cell(n, s, l)});
            cells.push_back({n, s, FixtureCell::kTotal, table.total(n, s)});
        }
    return cells;
}

void print_table_text(std::ostream& os, const std::vector<FixtureCell>& cells) {
    std::map<std::pair<int, int>, std::map<int, ExactInt>> rows;
    int max_l = 0;
    for (const auto& c : cells) {
        rows[{c.n, c.s}][c.l] = c.value;
        if (c.l != FixtureCell::kTotal)
            max_l = std::max(max_l, c.l);
    }
    os << "(n,s)";
    for (int l = 1; l <= max_l; ++l)
        os << "\tl=" << l;
    os << "\ttotal\n";
    for (const auto& [key, row] : rows) {
        os << "(" << key.first << "," << key.second << ")";
        for (int l = 1; l <= max_l; ++l) {
            os << "\t";
            auto it = row.find(l);
            if (it != row.end())
                os << it->second.str();
        }
        auto tot = row.find(FixtureCell::kTotal);
        os << "\t" << (tot == row.end() ? std::string() : tot->second.str()) << "\n";
    }
}

void print_table_json(std::ostream& os, const std::vector<FixtureCell>& cells) {
    os << "[\n";
    bool first = true;
    for (const auto& c : cells) {
        if (!first)
            os << ",\n";
        first = false;
        os << "  {\"n\": " << c.n << ", \"s\": " << c.s << ", \"l\": ";
        if (c.l == FixtureCell::kTotal)
            os << "\"TOTAL\"";
        else
            os << c.l;
        os << ", \"value\": \"" << c.value.str() << "\"}";
    }
    os << "\n]\n";
}

int run_table(const TableArgs& a, CountEngine& eng) {
    if (a.max_n < 1 || a.max_n > 8)
        throw std::invalid_argument("--max-n must be in [1, 8]");
    auto cells = generate_table_cells(a.max_n, eng.oracle_opts);

    if (a.format == "csv")
        std::cout << cells_to_csv(cells);
    else if (a.format == "json")
        print_table_json(std::cout, cells);
    else if (a.format == "text")
        print_table_text(std::cout, cells);
    else
        throw std::invalid_argument("unknown format: " + a.format);

    if (!a.check)
        return kOk;

    std::map<std::tuple<int, int, int>, ExactInt> got;
    for (const auto& c : cells)
        got[{c.n, c.s, c.l}] = c.value;

    int rows_checked = 0, cells_checked = 0, mismatches = 0;
    int last_n = -1, last_s = -1;
    for (const auto& f : fixture_cells()) {
        if (f.n > a.max_n)
            continue;
        if (f.n != last_n || f.s != last_s) {
            ++rows_checked;
            last_n = f.n;
            last_s = f.s;
        }
        ++cells_checked;
        auto it = got.find({f.n, f.s, f.l});
        ExactInt actual = (it == got.end()) ? ExactInt(-1) : it->second;
        if (actual != f.value) {
            ++mismatches;
            std::cout << "MISMATCH (" << f.n << "," << f.s << ","
                      << (f.l == FixtureCell::kTotal ? std::string("TOTAL") : std::to_string(f.l))
                      << "): fixture=" << f.value.str() << " got=" << actual.str() << "\n";
        }
    }
    // rows past the fixture (n = 8) are cross-checked formula vs oracle
    for (int n = 8; n <= a.max_n; ++n)
        for (int s = 1; s <= n; ++s) {
            ++rows_checked;
            for (int l = 1; l <= s; ++l) {
                ++cells_checked;
                ExactInt oracle = got.at({n, s, l});
                ExactInt formula = eng.le_lead(n, s, l);
                if (oracle != formula) {
                    ++mismatches;
                    std::cout << "MISMATCH (" << n << "," << s << "," << l
                              << "): formula=" << formula.str() << " oracle=" << oracle.str()
                              << "\n";
                }
            }
            ++cells_checked;
            if (got.at({n, s, FixtureCell::kTotal}) != eng.le(n, s))
                ++mismatches;
        }

    std::cout << rows_checked << " rows, " << cells_checked << " cells, " << mismatches
              << " mismatches\n";
    return mismatches == 0 ? kOk : kVerifyFailure;
}

struct VerifyArgs {
    std::string suite = "all";
    int max_n = 6;
    std::string caps = "8,8,6";
    std::string format = "text";
};

int run_verify(const VerifyArgs& a, CountEngine& eng) {
    auto caps_list = parse_int_list(a.caps);
    SeriesCaps caps;
    caps.nx = caps_list.size() > 0 ? caps_list[0] : 8;
    caps.ny = caps_list.size() > 1 ? caps_list[1] : caps.nx;
    caps.nz = caps_list.size() > 2 ? caps_list[2] : caps.ny;

    std::vector<VerifyOutcome> outcomes;
    if (a.suite == "identities" || a.suite == "all")
        outcomes.push_back(verify_identities(a.max_n, eng));
    if (a.suite == "bijections" || a.suite == "all")
        outcomes.push_back(verify_bijections(a.max_n, eng.oracle_opts));
    if (a.suite == "series" || a.suite == "all")
        outcomes.push_back(verify_series(caps, eng));
    if (a.suite == "asymptotics" || a.suite == "all")
        outcomes.push_back(verify_asymptotics(20, 8));
    if (outcomes.empty())
        throw std::invalid_argument("unknown suite: " + a.suite);

    bool ok = true;
    for (const auto& o : outcomes) {
        if (a.format == "json")
            std::cout << verify_json(o) << "\n";
        else
            verify_print_text(std::cout, o);
        ok = ok && o.ok();
    }
    return ok ? kOk : kVerifyFailure;
}

struct SeriesArgs {
    std::string name;
    std::string caps;
    std::string format = "json"; // coefficient dumps are JSON only
};

int run_series(const SeriesArgs& a) {
    std::vector<int> caps_list = a.caps.empty() ? std::vector<int>{} : parse_int_list(a.caps);
    auto cap_at = [&](std::size_t i, int fallback) {
        return i < caps_list.size() ? caps_list[i] : fallback;
    };

    static const std::map<std::string, GfName> gf_names = {
        {"P", GfName::P}, {"Q", GfName::Q}, {"R", GfName::R}, {"H", GfName::H},
        {"L", GfName::L}, {"T", GfName::T}, {"F", GfName::F}, {"D", GfName::D}};
    auto it = gf_names.find(a.name);
    if (it != gf_names.end()) {
        SeriesCaps caps;
        caps.nx = cap_at(0, 8);
        caps.ny = gf_arity(it->second) >= 2 ? cap_at(1, 8) : 0;
        caps.nz = gf_arity(it->second) == 3 ? cap_at(2, 6) : 0;
        std::cout << series_json(a.name, build_gf_closed(it->second, caps)) << "\n";
        return kOk;
    }
    if (a.name == "mu" || a.name == "eta" || a.name == "tau") {
        AsymFamily fam = a.name == "mu"    ? AsymFamily::Mu
                         : a.name == "eta" ? AsymFamily::Eta
                                           : AsymFamily::Tau;
        std::cout << series_json(a.name, asym_gf(fam, cap_at(0, 8))) << "\n";
        return kOk;
    }
    if (a.name == "rho" || a.name == "lambda") {
        AsymFamily fam = a.name == "rho" ? AsymFamily::Rho : AsymFamily::Lambda;
        std::cout << series_json(a.name, asym_gf(fam, cap_at(0, 8), cap_at(1, 8))) << "\n";
        return kOk;
    }
    throw std::invalid_argument("unknown series name: " + a.name);
}

struct AsymArgs {
    std::string family;
    std::optional<int> k, l;
    int digits = 30;
    bool convergence = false;
    std::string samples = "100,200,400,800";
};

int run_asym(const AsymArgs& a, CountEngine& eng) {
    if (a.digits < 6 || a.digits > 1000)
        throw std::invalid_argument("--digits must be in [6, 1000]");
    AsymFamily fam;
    int l = -1, k = -1;
    EInvPoly poly;
    if (a.family == "mu") {
        fam = AsymFamily::Mu;
        k = require(a.k, "--k");
        poly = mu(k);
    } else if (a.family == "eta") {
        fam = AsymFamily::Eta;
        k = require(a.k, "--k");
        poly = eta(k);
    } else if (a.family == "tau") {
        fam = AsymFamily::Tau;
        l = require(a.l, "--l");
        poly = tau(l);
    } else if (a.family == "rho") {
        fam = AsymFamily::Rho;
        l = require(a.l, "--l");
        k = require(a.k, "--k");
        poly = rho(l, k);
    } else if (a.family == "lambda") {
        fam = AsymFamily::Lambda;
        l = require(a.l, "--l");
        k = require(a.k, "--k");
        poly = lambda_const(l, k);
    } else {
        throw std::invalid_argument("unknown family: " + a.family);
    }
    std::cout << "poly " << poly.to_string() << "\n";
    std::cout << "value " << eval_einv(poly, a.digits) << "\n";
    if (a.convergence) {
        std::vector<long long> ns;
        for (int v : parse_int_list(a.samples))
            ns.push_back(v);
        auto report = convergence_report(fam, l, k, ns, a.digits, eng);
        std::cout << convergence_json(report) << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of parking functions: counts, golden table, "
                 "identity verification, generating-function dumps, asymptotics"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* cmd_count = app.add_subcommand("count", "evaluate one counting family");
    cmd_count->add_option("--family", count_args.family, "family")
        ->required()
        ->check(CLI::IsMember(
            {"all", "riordan", "surplus", "flaw", "le", "eq", "lead", "le-lead", "eq-lead"}));
    cmd_count->add_option("--n", count_args.n, "length");
    cmd_count->add_option("--m", count_args.m, "parking spaces");
    cmd_count->add_option("--s", count_args.s, "entry bound");
    cmd_count->add_option("--k", count_args.k, "flaw / surplus index");
    cmd_count->add_option("--l", count_args.l, "leading term");
    cmd_count->add_option("--method", count_args.method, "computation route")
        ->check(CLI::IsMember({"formula", "rec-a", "rec-b", "oracle", "series"}));

    TableArgs table_args;
    auto* cmd_table = app.add_subcommand("table", "reproduce the golden (n,s,l) table");
    cmd_table->add_option("--max-n", table_args.max_n, "largest n (<= 8)");
    cmd_table->add_flag("--check", table_args.check, "diff against the golden fixture");
    cmd_table->add_option("--format", table_args.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "run an identity-verification suite");
    cmd_verify->add_option("--suite", verify_args.suite, "suite")
        ->check(CLI::IsMember({"identities", "bijections", "series", "asymptotics", "all"}));
    cmd_verify->add_option("--max-n", verify_args.max_n, "exhaustive range");
    cmd_verify->add_option("--caps", verify_args.caps, "series caps nx,ny,nz");
    cmd_verify->add_option("--format", verify_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    SeriesArgs series_args;
    auto* cmd_series = app.add_subcommand("series", "dump series coefficients as JSON");
    cmd_series->add_option("--name", series_args.name, "series name")->required();
    cmd_series->add_option("--caps", series_args.caps, "per-variable caps, comma separated");
    cmd_series->add_option("--format", series_args.format, "json")
        ->check(CLI::IsMember({"json"}));

    AsymArgs asym_args;
    auto* cmd_asym = app.add_subcommand("asym", "asymptotic constants and convergence");
    cmd_asym->add_option("--family", asym_args.family, "family")
        ->required()
        ->check(CLI::IsMember({"mu", "eta", "tau", "rho", "lambda"}));
    cmd_asym->add_option("--k", asym_args.k, "flaw index");
    cmd_asym->add_option("--l", asym_args.l, "leading term");
    cmd_asym->add_option("--digits", asym_args.digits, "decimal digits [6, 1000]");
    cmd_asym->add_flag("--convergence", asym_args.convergence, "emit the convergence report");
    cmd_asym->add_option("--n", asym_args.samples, "sample sizes, comma separated");

    try {
        app.parse(argc, argv);

        CountEngine engine;
        engine.oracle_opts.budget = budget_from_env();

        if (cmd_count->parsed())
            return run_count(count_args, engine);
        if (cmd_table->parsed())
            return run_table(table_args, engine);
        if (cmd_verify->parsed())
            return run_verify(verify_args, engine);
        if (cmd_series->parsed())
            return run_series(series_args);
        if (cmd_asym->parsed())
            return run_asym(asym_args, engine);
        return kUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help and friends
            return app.exit(e);
        app.exit(e);
        return kUsage;
    } catch (const BudgetError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kResource;
    } catch (const FixtureError& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return kFixture;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
