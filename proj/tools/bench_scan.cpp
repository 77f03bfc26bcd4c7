// Times the serial scan driver against the OpenMP one on the same spec and
// checks the outputs are bit-identical.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "k3nu/scan.hpp"

using namespace k3nu;

namespace {

ScanSpec bench_spec(int rows) {
    ScanSpec spec;
    spec.parameter = ScanParameter::v_cc;
    spec.grid = {0.1, 10.0, rows};
    spec.base.params.v_cc = 2.0;
    spec.base.kossakowski =
        KossakowskiCoefficients::symmetric(0.1, 0.1, 0.1, 0.1, 0.0, 0.0);
    spec.base.tau = 0.1;
    spec.mode = ScanMode::delta_k3;
    return spec;
}

template <typename F>
double time_run(F f, ScanResult& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool identical(const ScanResult& a, const ScanResult& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const ScanRow &x = a.rows[i], &y = b.rows[i];
        if (std::memcmp(&x.param_value, &y.param_value, sizeof(double)) != 0) return false;
        if (std::memcmp(&x.k3_dirac, &y.k3_dirac, sizeof(double)) != 0) return false;
        if (std::memcmp(&x.k3_majorana, &y.k3_majorana, sizeof(double)) != 0) return false;
        if (std::memcmp(&x.delta_k3, &y.delta_k3, sizeof(double)) != 0) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int rows = 64;
    if (argc > 1) rows = std::atoi(argv[1]);
    if (rows < 2) rows = 2;

    ScanSpec spec = bench_spec(rows);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both drivers run serially\n");
#endif
    std::printf("scan: %d rows, delta_k3 mode, 64-point phi envelope\n\n", rows);

    ScanResult serial_result, parallel_result;
    double ts = time_run([&] { return run_scan_serial(spec); }, serial_result);
    double tp = time_run([&] { return run_scan(spec); }, parallel_result);

    std::printf("%-10s %10s %14s\n", "driver", "time [s]", "rows/s");
    std::printf("%-10s %10.3f %14.1f\n", "serial", ts, rows / ts);
    std::printf("%-10s %10.3f %14.1f\n", "parallel", tp, rows / tp);
    std::printf("\nspeedup: %.2fx\n", ts / tp);

    if (!identical(serial_result, parallel_result)) {
        std::printf("MISMATCH: serial and parallel rows differ\n");
        return 1;
    }
    std::printf("rows bit-identical: yes\n");
    return 0;
}
