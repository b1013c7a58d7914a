#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parkfun/oracle.hpp"

using namespace parkfun;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void bench_count(int n) {
    CountQuery q{n, n, n, 0, {}, {}};
    OracleOptions serial{kDefaultEnumerationBudget, false};
    OracleOptions parallel{kDefaultEnumerationBudget, true};

    auto t0 = clk::now();
    ExactInt ref = oracle_count_serial(q);
    double t_ref = ms_since(t0);

    t0 = clk::now();
    ExactInt ser = oracle_count(q, serial);
    double t_ser = ms_since(t0);

    t0 = clk::now();
    ExactInt par = oracle_count(q, parallel);
    double t_par = ms_since(t0);

    std::cout << "count n=" << n << "  value=" << ref.str() << "  reference=" << t_ref
              << "ms  kernel-serial=" << t_ser << "ms  kernel-omp=" << t_par << "ms"
              << (ref == ser && ser == par ? "" : "  MISMATCH") << "\n";
}

void bench_table(int n_max) {
    OracleOptions serial{kDefaultEnumerationBudget, false};
    OracleOptions parallel{kDefaultEnumerationBudget, true};

    auto t0 = clk::now();
    LeadingMaxTable ref = oracle_table(n_max, serial);
    double t_ser = ms_since(t0);

    t0 = clk::now();
    LeadingMaxTable par = oracle_table(n_max, parallel);
    double t_par = ms_since(t0);

    bool same = true;
    for (int n = 1; n <= n_max; ++n)
        for (int s = 1; s <= n; ++s)
            for (int l = 1; l <= s; ++l)
                same = same && ref.cell(n, s, l) == par.cell(n, s, l);

    std::cout << "table n<=" << n_max << "  serial=" << t_ser << "ms  omp=" << t_par << "ms"
              << (same ? "" : "  MISMATCH") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int max_n = (argc > 1) ? std::stoi(argv[1]) : 8;
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: disabled at build time\n";
#endif
    for (int n = 6; n <= max_n; ++n)
        bench_count(n);
    bench_table(std::min(max_n, 7));
    return 0;
}
