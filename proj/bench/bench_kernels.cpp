// Timing harness for the two OpenMP kernels against their serial references.
// Both must return identical values; the ratio is the whole point of the
// table, so nothing here is asserted away.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "asforge/catalog.hpp"
#include "asforge/io.hpp"

using namespace asforge;

namespace {

template <class F>
double time_of(F&& fn, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; i++) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-32s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    if (reps < 1) reps = 1;

    std::printf("%-32s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    ASCurve deep = construct(10, 5, Mode::Validated).curve();
    for (int n : {14, 16, 18}) {
        u64 a = 0, b = 0;
        double ts = time_of([&] { a = deep.count_points_serial(n); }, reps);
        double tp = time_of([&] { b = deep.count_points(n); }, reps);
        if (a != b) {
            std::fprintf(stderr, "count_points mismatch at n=%d: %llu vs %llu\n", n,
                         (unsigned long long)a, (unsigned long long)b);
            return 1;
        }
        char name[64];
        std::snprintf(name, sizeof name, "count_points(n=%d)", n);
        row(name, ts, tp);
    }

    ASCurve wide = construct(6, 5, Mode::Validated).curve();
    for (int N : {4, 6}) {
        size_t a = 0, b = 0;
        double ts = time_of([&] { a = brute_force_aut_serial(wide, N).size(); }, reps);
        double tp = time_of([&] { b = brute_force_aut(wide, N).size(); }, reps);
        if (a != b) {
            std::fprintf(stderr, "brute_force_aut mismatch at N=%d: %zu vs %zu\n", N, a, b);
            return 1;
        }
        char name[64];
        std::snprintf(name, sizeof name, "brute_force_aut(N=%d)", N);
        row(name, ts, tp);
    }
    return 0;
}
