#include "rsharp/expr_parser.hpp"
#include "rsharp/numeric/verify.hpp"

#include <benchmark/benchmark.h>

using namespace rsharp;
using namespace rsharp::numeric;

namespace {

const SurfaceInvariants& curve() {
    static const SurfaceInvariants inv = classify(parse_polynomial("(z2 - z1^2)^3"));
    return inv;
}

void pairing(benchmark::State& st, bool parallel) {
    FamilyInstance fi = build_family(curve(), Condition::CaseNSlope, 1.0 / 64);
    const auto n = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) {
        Estimate e = parallel ? estimate_pairing_parallel(fi.problem, n, 1) : estimate_pairing_serial(fi.problem, n, 1);
        benchmark::DoNotOptimize(e.value);
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void measure(benchmark::State& st, bool parallel) {
    Decomposition dec = decompose(curve());
    MeasureProblem mp;
    mp.omega = NumPoly(curve().omega);
    mp.decomposition = &dec;
    mp.region = 0;
    mp.hi = 0.01;
    mp.proposal = Proposal::uniform({-1, 1}, {-1, 1});
    const auto n = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) {
        Estimate e = parallel ? estimate_measure_parallel(mp, n, 1) : estimate_measure_serial(mp, n, 1);
        benchmark::DoNotOptimize(e.value);
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void scaling(benchmark::State& st, bool parallel) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) {
        ScalingResult r = parallel ? scaling_identity_parallel(curve(), 2.0, n) : scaling_identity_serial(curve(), 2.0, n);
        benchmark::DoNotOptimize(r.max_residual);
    }
}

}  // namespace

BENCHMARK_CAPTURE(pairing, serial, false)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pairing, parallel, true)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(measure, serial, false)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(measure, parallel, true)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(scaling, serial, false)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(scaling, parallel, true)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
