// Times the serial reference spectral kernel against the OpenMP one, and the
// verification fan-out, on a few representative sizes.

#include <chrono>
#include <cstdio>
#include <vector>

#include "fjacobi/linear_diag.hpp"
#include "fjacobi/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class F>
double time_ms(F&& f, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n\n");
#endif

    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial (ms)", "openmp (ms)", "speedup");

    const std::vector<std::pair<long, double>> cells = {{25, 1.0}, {50, 0.5}, {50, 10.0}, {80, 2.0}};
    for (const auto& cell : cells) {
        const long d = cell.first;
        const double w = cell.second;
        const int reps = d >= 80 ? 5 : 10;
        const double ts = time_ms([&] { fjacobi::spectrum_serial(d, w, 1e-10); }, reps);
        const double tp = time_ms([&] { fjacobi::spectrum(d, w, 1e-10); }, reps);
        char label[64];
        std::snprintf(label, sizeof label, "spectrum d=%ld w=%.1f", d, w);
        std::printf("%-28s %12.3f %12.3f %8.2fx\n", label, ts, tp, ts / tp);

        // Cross-check: the two kernels must agree bit for bit.
        const auto a = fjacobi::spectrum_serial(d, w, 1e-10);
        const auto b = fjacobi::spectrum(d, w, 1e-10);
        if (a.eigenvalues != b.eigenvalues || a.eigenvectors != b.eigenvectors) {
            std::printf("MISMATCH between serial and parallel results\n");
            return 1;
        }
    }

    for (const char* suite : {"f-identities", "determinants"}) {
        // The suites fan out across cases; wall time is the interesting part.
        const double t1 = time_ms([&] { fjacobi::verify::run_suite(suite, 200, 42); }, 3);
        char label[64];
        std::snprintf(label, sizeof label, "verify %s", suite);
        std::printf("%-28s %12s %12.3f %9s\n", label, "-", t1, "-");
    }
    return 0;
}
