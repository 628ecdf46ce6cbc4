#include <benchmark/benchmark.h>

#include "qsimplex/clifford.hpp"
#include "qsimplex/hietarinta.hpp"
#include "qsimplex/higher.hpp"
#include "qsimplex/rng.hpp"
#include "qsimplex/simplex.hpp"
#include "qsimplex/unitary.hpp"

using namespace qsx;

namespace {

Mat unitary_tetra() {
    Rng rng(1);
    return unitary_family(sample_family_point(3, Placement::y_m, +1, rng)).t;
}

void bm_tetra_vertex(benchmark::State& state) {
    Mat r = unitary_tetra();
    for (auto _ : state) benchmark::DoNotOptimize(tetra_vertex(r));
}
BENCHMARK(bm_tetra_vertex);

void bm_tetra_edge(benchmark::State& state) {
    Mat r = unitary_tetra();
    for (auto _ : state) benchmark::DoNotOptimize(tetra_edge(r));
}
BENCHMARK(bm_tetra_edge);

void bm_four_simplex_dense(benchmark::State& state) {
    Mat y = Mat::Zero(4, 4);
    y(0, 0) = 1;
    y(1, 1) = std::polar(1.0, 0.4);
    y(2, 2) = std::polar(1.0, 2.2);
    y(3, 3) = std::polar(1.0, -1.0);
    Mat t = lift_4simplex({y, pauli_z(), 0});
    for (auto _ : state) benchmark::DoNotOptimize(four_simplex(t));
}
BENCHMARK(bm_four_simplex_dense);

void bm_five_simplex_probes(benchmark::State& state) {
    Mat y = Mat::Zero(4, 4);
    y(0, 0) = 1;
    y(1, 1) = std::polar(1.0, 0.4);
    y(2, 2) = std::polar(1.0, 2.2);
    y(3, 3) = std::polar(1.0, -1.0);
    Mat t = lift_5simplex({y, pauli_z(), 0});
    for (auto _ : state) benchmark::DoNotOptimize(five_simplex(t, int(state.range(0)), 7));
}
BENCHMARK(bm_five_simplex_probes)->Arg(5)->Arg(20);

void bm_apply_embedded_15_qubits(benchmark::State& state) {
    Rng rng(2);
    EmbeddedOperator e{rng.gaussian_matrix(32, 32), {2, 5, 9, 11, 14}, 15};
    Vec v = rng.gaussian_vector(1L << 15);
    for (auto _ : state) benchmark::DoNotOptimize(apply_embedded(e, v));
}
BENCHMARK(bm_apply_embedded_15_qubits);

void bm_unitary_family_point(benchmark::State& state) {
    Rng rng(3);
    for (auto _ : state) {
        UnitaryFamilyPoint pt = sample_family_point(7, Placement::y_m, +1, rng);
        benchmark::DoNotOptimize(unitary_family(pt));
    }
}
BENCHMARK(bm_unitary_family_point);

void bm_solve_constraints(benchmark::State& state) {
    for (auto _ : state) {
        SolveOptions opt;
        opt.seed = 1;
        benchmark::DoNotOptimize(solve_constraints(opt));
    }
}
BENCHMARK(bm_solve_constraints);

}  // namespace

BENCHMARK_MAIN();
