// Times the OpenMP descriptor kernels against the serial reference
// implementations and checks that both produce identical values.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "varshape/descriptors.hpp"
#include "varshape/geometry.hpp"

using namespace varshape;
using Clock = std::chrono::steady_clock;

namespace {

Contour star_contour(std::size_t n) {
    std::vector<Vec2> v;
    const int tips = 7;
    for (int i = 0; i < 2 * tips; ++i) {
        const double ang = static_cast<double>(i) * M_PI / tips;
        const double r = (i % 2 == 0) ? 100.0 : 55.0;
        v.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return resample(Contour(std::move(v)), n);
}

template <typename F>
double time_ms(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool identical(const ScalarSeries& a, const ScalarSeries& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP off)\n");
#endif
    std::printf("%-8s %-22s %12s %12s %9s  %s\n", "points", "kernel", "serial(ms)", "parallel(ms)",
                "speedup", "equal");

    for (std::size_t n : {200, 400, 800, 1600, 3200}) {
        const Contour c = star_contour(n);

        ScalarSeries phi_s, phi_p;
        double ts = time_ms([&] { phi_s = reference::var_descriptor(c); }, reps);
        double tp = time_ms([&] { phi_p = var_descriptor(c); }, reps);
        std::printf("%-8zu %-22s %12.3f %12.3f %8.2fx  %s\n", n, "var_descriptor", ts, tp, ts / tp,
                    identical(phi_s, phi_p) ? "yes" : "NO");

        GlobalQuantities gs, gp;
        ts = time_ms([&] { gs = reference::global_quantities(c); }, reps);
        tp = time_ms([&] { gp = global_quantities(c); }, reps);
        const bool eq = identical(gs.phi, gp.phi) && identical(gs.phi_dot, gp.phi_dot) &&
                        identical(gs.A, gp.A) && identical(gs.B, gp.B);
        std::printf("%-8zu %-22s %12.3f %12.3f %8.2fx  %s\n", n, "global_quantities", ts, tp, ts / tp,
                    eq ? "yes" : "NO");

        ScalarSeries ai_s, ai_p;
        ts = time_ms([&] { ai_s = reference::area_integral_invariant(c); }, reps);
        tp = time_ms([&] { ai_p = area_integral_invariant(c); }, reps);
        std::printf("%-8zu %-22s %12.3f %12.3f %8.2fx  %s\n", n, "area_integral_invariant", ts, tp,
                    ts / tp, identical(ai_s, ai_p) ? "yes" : "NO");
    }
    return 0;
}
