#include <chrono>
#include <cstdio>

#include "beg/e_group.hpp"

// Compares the serial reference census against the OpenMP kernel on the
// largest census sizes.

namespace {

template <class F>
double time_ms(F f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    const int reps = 5;
    std::printf("%4s %6s %12s %12s %8s\n", "n", "nu", "serial(ms)", "openmp(ms)", "speedup");
    for (std::uint32_t n : {20u, 24u, 27u}) {
        for (int nu : {-1, 1}) {
            volatile std::uint64_t sink = 0;
            const double ts = time_ms(
                [&] { sink += beg::order_census_serial(n, nu)[4]; }, reps);
            const double tp = time_ms(
                [&] { sink += beg::order_census_parallel(n, nu)[4]; }, reps);
            std::printf("%4u %6d %12.3f %12.3f %8.2f\n", n, nu, ts, tp, ts / tp);
            if (beg::order_census_serial(n, nu) != beg::order_census_parallel(n, nu)) {
                std::printf("MISMATCH at n=%u nu=%d\n", n, nu);
                return 1;
            }
        }
    }
    return 0;
}
