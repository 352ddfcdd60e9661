#include <benchmark/benchmark.h>

#include "niho/closed_forms.hpp"
#include "niho/codes.hpp"
#include "niho/exp_sums.hpp"

namespace {

const niho::FieldCtx& gf729() {
    static const niho::FieldCtx ctx = niho::build_field(3, 3);
    return ctx;
}

const niho::FieldCtx& gf64() {
    static const niho::FieldCtx ctx = niho::build_field(2, 3);
    return ctx;
}

void BM_BuildField_GF729(benchmark::State& state) {
    for (auto _ : state) {
        niho::FieldCtx ctx = niho::build_field(3, 3);
        benchmark::DoNotOptimize(ctx.q());
    }
}
BENCHMARK(BM_BuildField_GF729);

void BM_ValueDist_Niho_PAry4(benchmark::State& state) {
    const auto& ctx = gf729();
    const auto fam = niho::make_family(3, 3, niho::PAry4Params{14});
    for (auto _ : state) {
        auto dist = niho::value_distribution(ctx, fam, niho::SumMethod::Niho);
        benchmark::DoNotOptimize(dist.domain_size);
    }
}
BENCHMARK(BM_ValueDist_Niho_PAry4);

void BM_ValueDist_Direct_PAry4(benchmark::State& state) {
    const auto& ctx = gf729();
    const auto fam = niho::make_family(3, 3, niho::PAry4Params{14});
    for (auto _ : state) {
        auto dist = niho::value_distribution(ctx, fam, niho::SumMethod::Direct);
        benchmark::DoNotOptimize(dist.domain_size);
    }
}
BENCHMARK(BM_ValueDist_Direct_PAry4);

void BM_WeightWords_Binary4(benchmark::State& state) {
    const auto& ctx = gf64();
    const auto fam = niho::make_family(2, 3, niho::Binary4Params{1, 5});
    for (auto _ : state) {
        auto dist =
            niho::weight_dist_enumerate(ctx, fam, niho::WordMethod::DirectWords);
        benchmark::DoNotOptimize(dist.length);
    }
}
BENCHMARK(BM_WeightWords_Binary4);

void BM_N3Brute_PAry4(benchmark::State& state) {
    const auto& ctx = gf729();
    const auto fam = niho::make_family(3, 3, niho::PAry4Params{14});
    for (auto _ : state) {
        benchmark::DoNotOptimize(niho::n3(fam, niho::CountMethod::Brute, &ctx));
    }
}
BENCHMARK(BM_N3Brute_PAry4);

}  // namespace

BENCHMARK_MAIN();
