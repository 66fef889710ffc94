// Compares the OpenMP sweep kernels with their serial references.
//
//   bench_sweep [steps] [repeats]

#include "tqmem/decoherence.hpp"
#include "tqmem/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int steps = argc > 1 ? std::atoi(argv[1]) : 2000;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    std::printf("threads=%d steps=%d repeats=%d\n", omp_get_max_threads(), steps, repeats);
    std::printf("%-16s %12s %12s %8s %6s\n", "preset", "serial[s]", "omp[s]", "speedup", "same");

    for (const auto& preset : tqm::presets()) {
        tqm::ExperimentConfig config = preset.config;
        config.steps = steps;
        std::vector<tqm::BoundsSample> serial, parallel;
        const double ts = best_of(repeats, [&] { serial = tqm::run_sweep_serial(config); });
        const double tp = best_of(repeats, [&] { parallel = tqm::run_sweep(config); });
        std::printf("%-16s %12.4f %12.4f %8.2f %6s\n", preset.name.c_str(), ts, tp, ts / tp,
                    serial == parallel ? "yes" : "NO");
    }

    const auto grid = tqm::time_grid(20.0, steps * 10);
    for (const double s : {0.5, 1.0, 2.5}) {
        tqm::EnvironmentSpec spec;
        spec.s = s;
        tqm::DecoherenceTrace a, b;
        const double ts = best_of(repeats, [&] { a = tqm::decoherence_trace_serial(grid, spec); });
        const double tp = best_of(repeats, [&] { b = tqm::decoherence_trace(grid, spec); });
        std::printf("alpha s=%-8.1f %12.4f %12.4f %8.2f %6s\n", s, ts, tp, ts / tp,
                    a.alpha == b.alpha ? "yes" : "NO");
    }
    return 0;
}
