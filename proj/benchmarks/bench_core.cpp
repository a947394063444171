#include <benchmark/benchmark.h>

#include "boro/containment.hpp"

using namespace boro;

namespace {

PointIdealSystem triple_point_system(unsigned n) {
    auto arr = boroczky_lines(n);
    auto rep = incidence(arr);
    auto T = triple_points(arr, rep, nullptr);
    return make_point_system(xyz_ring(), arr.field, T);
}

void BM_CyclotomicMul(benchmark::State& state) {
    auto field = CycField::get(static_cast<unsigned>(state.range(0)));
    CycElem a = CycElem::zeta_power(field, 1) + CycElem::from_rational(field, make_rational(3, 7));
    CycElem b = CycElem::zeta_power(field, 5) - CycElem::from_rational(field, make_rational(2, 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_CyclotomicMul)->Arg(12)->Arg(44)->Arg(48);

void BM_CyclotomicInverse(benchmark::State& state) {
    auto field = CycField::get(static_cast<unsigned>(state.range(0)));
    CycElem a = CycElem::zeta_power(field, 3) + CycElem::from_rational(field, make_rational(5, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(BM_CyclotomicInverse)->Arg(12)->Arg(48);

void BM_Incidence(benchmark::State& state) {
    auto arr = boroczky_lines(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(incidence(arr));
    }
}
BENCHMARK(BM_Incidence)->Arg(8)->Arg(12);

void BM_RadicalIdeal(benchmark::State& state) {
    auto sys = triple_point_system(static_cast<unsigned>(state.range(0)));
    SymbolicOptions opts;
    opts.orbit_grouping = state.range(0) >= 10;
    opts.verify_multiplicity = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(symbolic_power(sys, 1, opts));
    }
}
BENCHMARK(BM_RadicalIdeal)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SymbolicCube(benchmark::State& state) {
    auto sys = triple_point_system(static_cast<unsigned>(state.range(0)));
    SymbolicOptions opts;
    opts.orbit_grouping = state.range(0) >= 10;
    opts.verify_multiplicity = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(symbolic_power(sys, 3, opts));
    }
}
BENCHMARK(BM_SymbolicCube)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GroebnerSquare(benchmark::State& state) {
    auto sys = triple_point_system(static_cast<unsigned>(state.range(0)));
    SymbolicOptions opts;
    opts.orbit_grouping = state.range(0) >= 10;
    opts.verify_multiplicity = false;
    auto I = symbolic_power(sys, 1, opts);
    auto square = ideal_power(I.rational(), 2);
    for (auto _ : state) {
        // rebuild to defeat the GB cache
        Ideal<Rational> fresh(square.ring(), square.gens());
        benchmark::DoNotOptimize(fresh.groebner());
    }
}
BENCHMARK(BM_GroebnerSquare)->Arg(8)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_ResolutionSquare(benchmark::State& state) {
    auto sys = triple_point_system(static_cast<unsigned>(state.range(0)));
    SymbolicOptions opts;
    opts.orbit_grouping = state.range(0) >= 10;
    opts.verify_multiplicity = false;
    auto I = symbolic_power(sys, 1, opts);
    auto square = ideal_power(I.rational(), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(free_resolution(square));
    }
}
BENCHMARK(BM_ResolutionSquare)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
