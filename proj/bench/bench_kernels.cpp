// Wall-clock comparison of the serial and OpenMP survey kernels.
//   bench_kernels [n] [samples]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "jordanrep/survey.hpp"

using namespace jordanrep;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
    std::cout << std::left << std::setw(14) << name << std::right << std::fixed << std::setprecision(1)
              << std::setw(12) << serial << std::setw(12) << parallel << std::setw(9) << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << "x  " << (same ? "match" : "MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 5;
    const std::size_t samples = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 10;
    if (n == 0 || samples == 0) {
        std::cerr << "usage: bench_kernels [n >= 1] [samples >= 1]\n";
        return 1;
    }
    std::cout << "n = " << n << ", samples = " << samples << ", threads = " << worker_threads() << "\n\n";
    std::cout << std::left << std::setw(14) << "kernel" << std::right << std::setw(12) << "serial ms" << std::setw(12)
              << "omp ms" << std::setw(10) << "speedup" << '\n';
    bool all_same = true;

    std::vector<Stratum> ts, tp;
    const double a = time_ms([&] { ts = strata_table_serial(n + 2); });
    const double b = time_ms([&] { tp = strata_table_parallel(n + 2); });
    row("strata", a, b, ts == tp);
    all_same &= ts == tp;

    const Partition full({static_cast<unsigned>(n)});
    std::vector<SamplePoint> ss, sp;
    const double c = time_ms([&] { ss = sample_batch_serial(full, 0, samples * 4, 3); });
    const double d = time_ms([&] { sp = sample_batch_parallel(full, 0, samples * 4, 3); });
    bool same = ss.size() == sp.size();
    for (std::size_t i = 0; same && i < ss.size(); ++i) same = ss[i].x == sp[i].x && ss[i].y == sp[i].y;
    row("sample", c, d, same);
    all_same &= same;

    SurveyOptions opts;
    opts.samples_per_partition = samples;
    std::vector<SampleAnalysis> vs, vp;
    const auto parts = partitions(n);
    const double e = time_ms([&] { vs = survey_serial(parts, opts); });
    const double f = time_ms([&] { vp = survey_parallel(parts, opts); });
    row("survey", e, f, vs == vp);
    all_same &= vs == vp;

    return all_same ? 0 : 2;
}
