/* Timing harness comparing the serial reference kernels against the OpenMP
 * paths.  Not a test: it prints a table and always exits 0 (after asserting
 * the two paths agree, since a fast wrong answer is worthless).
 */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "cablefloer/hfunc.hpp"
#include "cablefloer/parallel.hpp"
#include "cablefloer/presentation.hpp"
#include "cablefloer/presets.hpp"

using namespace cf;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <class F>
double best_of(int reps, F&& f)
{
    double best = 1e30;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double t = ms_since(t0);
        if (t < best)
            best = t;
    }
    return best;
}

void row(const std::string& name, double serial, double parallel)
{
    std::printf("%-42s %10.2f ms %10.2f ms %8.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main()
{
    const int threads = thread_count();
    std::printf("threads: %d (set CABLEFLOER_THREADS to override)\n\n", threads);
    std::printf("%-42s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    HKnot t34 = HKnot::from_delta(knot_preset("T(3,4)"));

    {
        const int n = 3, m = 8, lo = -10, hi = 10;
        std::vector<int> a, b;
        double ts = best_of(3, [&] { a = h_stab_grid_serial(t34, n, m, lo, hi); });
        double tp = best_of(3, [&] { b = h_stab_grid(t34, n, m, lo, hi, threads); });
        if (a != b) {
            std::fprintf(stderr, "h_stab_grid mismatch\n");
            return 1;
        }
        row("h_stab grid n=3 m=8 box [-10,10]^3", ts, tp);
    }

    {
        Presentation pres = build_torus(3, 2);
        std::vector<Slice> slices = box_slices(3, -8, 12, -20, 0);
        std::vector<int> a, b;
        double ts = best_of(3, [&] { a = dim_scan_serial(pres, slices); });
        double tp = best_of(3, [&] { b = dim_scan(pres, slices, threads); });
        if (a != b) {
            std::fprintf(stderr, "dim_scan mismatch (torus)\n");
            return 1;
        }
        row("dim scan torus n=3 m=2, " + std::to_string(slices.size()) + " slices", ts, tp);
    }

    {
        Presentation pres = build_colored(t34.staircase(), 2, 10);
        std::vector<Slice> slices = box_slices(2, -10, 8, -20, 0);
        std::vector<int> a, b;
        double ts = best_of(3, [&] { a = dim_scan_serial(pres, slices); });
        double tp = best_of(3, [&] { b = dim_scan(pres, slices, threads); });
        if (a != b) {
            std::fprintf(stderr, "dim_scan mismatch (colored)\n");
            return 1;
        }
        row("dim scan colored T(3,4) n=2, " + std::to_string(slices.size()) + " slices", ts, tp);
    }

    return 0;
}
