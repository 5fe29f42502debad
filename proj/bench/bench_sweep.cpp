#include <cstdio>
#include <cstdlib>

#include "polyq/bending.hpp"
#include "polyq/kaehler.hpp"
#include "polyq/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// wall-time comparison of the serial reference sweep against the OpenMP one,
// both from cold caches:  polyq_bench [max_leaves] [max_label]
int main(int argc, char** argv) {
    const int max_leaves = argc > 1 ? std::atoi(argv[1]) : 5;
    const int max_label = argc > 2 ? std::atoi(argv[2]) : 4;

    auto cold = [] {
        polyq::clear_multiplicity_registry();
        polyq::clear_labeling_registry();
    };

    std::printf("agreement sweep, max_leaves=%d max_label=%d\n", max_leaves, max_label);

    cold();
    auto serial = polyq::check_agreement(max_leaves, max_label, polyq::ExecMode::Serial);
    std::printf("serial    %8.3f s   checks=%lld failures=%zu\n", serial.wall_seconds,
                serial.checks_run, serial.failures.size());

    cold();
    auto parallel = polyq::check_agreement(max_leaves, max_label, polyq::ExecMode::Parallel);
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("parallel  %8.3f s   checks=%lld failures=%zu threads=%d speedup=%.2fx\n",
                parallel.wall_seconds, parallel.checks_run, parallel.failures.size(), threads,
                parallel.wall_seconds > 0 ? serial.wall_seconds / parallel.wall_seconds : 0.0);

    const bool same = serial.to_json(false) == parallel.to_json(false);
    std::printf("reports identical: %s\n", same ? "yes" : "NO");
    return (serial.pass() && parallel.pass() && same) ? 0 : 1;
}
