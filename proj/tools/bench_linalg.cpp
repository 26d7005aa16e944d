// Benchmark of the elimination kernel: serial reference vs OpenMP-parallel,
// on random dense matrices and on a wedge-complex differential assembled
// from a real point-set instance.  Results must agree exactly.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "subsyz/koszul.hpp"

using namespace subsyz;

namespace {

Matrix random_matrix(const Field& F, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m(rows, cols);
    for (auto& x : m.a) x = std::uint32_t(rng() % F.prime());
    return m;
}

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_case(const Field& F, const char* label, const Matrix& m) {
    std::size_t r_serial = 0, r_parallel = 0;
    double t_serial = time_ms([&] { r_serial = serial::rank(F, m); });
    double t_parallel = time_ms([&] { r_parallel = rank(F, m); });
    std::printf("%-28s %5zux%-5zu rank %-5zu serial %8.1f ms  parallel %8.1f ms  speedup %.2fx%s\n",
                label, m.rows, m.cols, r_serial, t_serial, t_parallel, t_serial / t_parallel,
                r_serial == r_parallel ? "" : "  MISMATCH");
}

}  // namespace

int main() {
    Field F(31991);
    std::printf("threads: %d\n", omp_get_max_threads());

    bench_case(F, "random 600x600", random_matrix(F, 600, 600, 1));
    bench_case(F, "random 1500x1500", random_matrix(F, 1500, 1500, 2));
    bench_case(F, "random 3000x1500", random_matrix(F, 3000, 1500, 3));

    // d_{2,3} for 22 certified-generic points in P^6 (1316 x 1302, rank 876).
    PointSet X = random_points(6, 22, F, 42).points;
    IdealCache cache(X);
    KoszulSlice s = koszul_differential(cache, 2, 3);
    bench_case(F, "wedge differential d_{2,3}", s.matrix);
    return 0;
}
