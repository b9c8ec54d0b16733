// Compares the serial sweep against the OpenMP one on a whole (k,n) type and
// checks they agree. Usage: bench-sweep [k] [n] [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "postnikov/sweep.hpp"

int main(int argc, char** argv) {
    const int k = argc > 1 ? std::atoi(argv[1]) : 2;
    const int n = argc > 2 ? std::atoi(argv[2]) : 5;
    const int threads = argc > 3 ? std::atoi(argv[3]) : 0;
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const auto serial = postnikov::sweep_type(k, n, false);
    const auto t1 = clock::now();
    const auto parallel = postnikov::sweep_type(k, n, true);
    const auto t2 = clock::now();

    const auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };
    std::cout << "type (" << k << "," << n << "): " << serial.count << " permutations\n";
    std::cout << "serial:   " << ms(t0, t1) << " ms  (pass " << serial.pass << ", fail "
              << serial.fail << ", max depth " << serial.max_depth << ")\n";
    std::cout << "parallel: " << ms(t1, t2) << " ms  (pass " << parallel.pass << ", fail "
              << parallel.fail << ", max depth " << parallel.max_depth << ")\n";
    const bool same = serial.pass == parallel.pass && serial.fail == parallel.fail &&
                      serial.max_depth == parallel.max_depth &&
                      serial.failures == parallel.failures;
    std::cout << (same ? "results identical\n" : "RESULTS DIFFER\n");
    return same ? 0 : 1;
}
