// Times the OpenMP kernels against their serial references and checks the
// outputs match bit-for-bit.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fnh/coordseq.hpp"
#include "fnh/flutes.hpp"
#include "fnh/kernels.hpp"
#include "fnh/metric.hpp"

using namespace fnh;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_ms(Fn fn) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                equal ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> len(0.01, 20.0);

    const std::size_t n = 2000000;
    std::vector<PantsGeom> pants;
    pants.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pants.push_back(PantsGeom{len(gen), len(gen), len(gen)});

    {
        std::vector<double> a, b;
        double ts = time_ms([&] { a = batch_orthodistance_serial(pants); });
        double tp = time_ms([&] { b = batch_orthodistance(pants); });
        report("orthodistance batch", ts, tp, a == b);
    }
    {
        std::vector<PantsGeom> small(pants.begin(), pants.begin() + 100000);
        std::vector<PentagonSplit> a, b;
        double ts = time_ms([&] { a = batch_pentagon_split_serial(small); });
        double tp = time_ms([&] { b = batch_pentagon_split(small); });
        bool eq = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            eq = eq && a[i].c1 == b[i].c1 && a[i].d1 == b[i].d1 && a[i].d2 == b[i].d2;
        report("pentagon split batch", ts, tp, eq);
    }
    {
        CoordSeq z(RateExpr::power_log(4.0, 0.0, 1.0), RateExpr::constant(0.5));
        CoordSeq w(RateExpr::power_log(4.0, 0.0, 1.0), RateExpr::constant(-0.5));
        std::vector<double> a, b;
        double ts = time_ms([&] { a = metric_terms_serial(z, w, 2000000); });
        double tp = time_ms([&] { b = metric_terms(z, w, 2000000); });
        report("metric terms", ts, tp, a == b);
    }
    {
        CoordSeq mid(RateExpr::power_log(4.0, 0.0, 1.0), RateExpr::zero());
        mid.set_peripheral(RateExpr::geometric(1.0, 0.5));
        FluteStructure f{mid};
        SeriesSum s;
        double tp = time_ms([&] { s = orthodistance_series(f, 200000); });
        std::printf("%-28s %9.2f ms   S_200000 = %.12f (+tail <= %.3g)\n",
                    "orthodistance series", tp, s.partial_sum, s.upper_tail);
    }
    return 0;
}
