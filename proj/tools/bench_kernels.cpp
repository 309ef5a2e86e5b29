// SPDX-License-Identifier: Apache-2.0
//
// Timing harness for the matvec kernels: serial reference vs OpenMP gather,
// real and complex paths, on the dicke_bell family. The parallel kernel must
// produce bitwise-identical output for any thread count; this prints the
// comparison alongside the timings.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symbell/bell_ops.hpp"
#include "symbell/kernels.hpp"
#include "symbell/spectra.hpp"
#include "symbell/util.hpp"

using namespace symbell;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int n_max = 16;
    int reps = 5;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--n-max") == 0 && i + 1 < argc) n_max = std::atoi(argv[++i]);
        if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) reps = std::atoi(argv[++i]);
    }
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads=%d reps=%d\n", threads, reps);
    std::printf("%4s %10s %12s %12s %9s %9s\n", "n", "terms", "serial_ms", "parallel_ms",
                "speedup", "bitwise");

    for (int n = 10; n <= n_max; n += 2) {
        PauliSum sum = dicke_bell(n);
        CompiledSum op = CompiledSum::from(sum);
        const uint64_t dim = op.dim();
        std::vector<double> in(dim), out_s(dim), out_p(dim);
        SplitMix64 rng(42);
        for (auto& a : in) a = rng.next_symmetric();

        apply_serial(op, in.data(), out_s.data());  // warm
        auto t0 = Clock::now();
        for (int r = 0; r < reps; ++r) apply_serial(op, in.data(), out_s.data());
        double serial_ms = ms_since(t0) / reps;

        apply_parallel(op, in.data(), out_p.data());
        t0 = Clock::now();
        for (int r = 0; r < reps; ++r) apply_parallel(op, in.data(), out_p.data());
        double parallel_ms = ms_since(t0) / reps;

        bool same = std::memcmp(out_s.data(), out_p.data(), dim * sizeof(double)) == 0;
        std::printf("%4d %10zu %12.3f %12.3f %9.2f %9s\n", n, sum.size(), serial_ms,
                    parallel_ms, serial_ms / parallel_ms, same ? "yes" : "NO");
    }

    std::printf("\niterative solver (dicke_bell):\n");
    for (int n : {10, 12}) {
        auto t0 = Clock::now();
        SpectralReport rep = extremal_eigen_iterative(dicke_bell(n));
        std::printf("  n=%d max_abs=%.12g iterations=%ld time_ms=%.1f\n", n, rep.max_abs,
                    rep.iterations, ms_since(t0));
    }
    return 0;
}
