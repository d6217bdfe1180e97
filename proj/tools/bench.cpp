// Timing comparison between the serial reference sweep and the OpenMP path.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abspec/spectrum.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const abspec::SweepSpec& spec, const abspec::ModelParams& p,
              bool parallel, abspec::SweepTable& out) {
    const auto t0 = Clock::now();
    out = abspec::sweep(spec, p, parallel);
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double max_branch_diff(const abspec::SweepTable& a, const abspec::SweepTable& b) {
    if (a.branches.size() != b.branches.size()) return 1e300;
    double worst = 0.0;
    for (size_t i = 0; i < a.branches.size(); ++i)
        for (size_t j = 0; j < a.branches[i].lambda.size(); ++j) {
            const double x = a.branches[i].lambda[j];
            const double y = b.branches[i].lambda[j];
            if (std::isnan(x) != std::isnan(y)) return 1e300;
            if (!std::isnan(x)) worst = std::max(worst, std::abs(x - y));
        }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    int steps = 801;
    if (argc > 1) steps = std::atoi(argv[1]);
    const abspec::ModelParams p{0.3, 1.0};
    const abspec::SweepSpec spec{{0.95, 0.25, 0.25}, -5.0, 5.0, steps, -3.0, 9.0};

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP, both runs are serial\n");
#endif
    std::printf("sweep: dir=(0.95,0.25,0.25), t in [-5,5], %d steps, alpha=0.3, B=1\n",
                steps);

    abspec::SweepTable serial_out, parallel_out;
    const double warm = run_ms(spec, p, true, parallel_out);
    (void)warm;
    const double t_par = run_ms(spec, p, true, parallel_out);
    const double t_ser = run_ms(spec, p, false, serial_out);

    std::printf("serial reference: %9.1f ms\n", t_ser);
    std::printf("parallel:         %9.1f ms\n", t_par);
    std::printf("speedup:          %9.2fx\n", t_ser / t_par);

    const double diff = max_branch_diff(serial_out, parallel_out);
    std::printf("max |serial - parallel| over all branch points: %g\n", diff);
    if (diff != 0.0) {
        std::printf("FAIL: outputs differ\n");
        return 1;
    }
    std::printf("outputs identical\n");
    return 0;
}
