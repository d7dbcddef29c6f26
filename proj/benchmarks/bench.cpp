#include <benchmark/benchmark.h>

#include "ftam/generators.hpp"
#include "ftam/sat3.hpp"

using namespace ftam;

namespace {

// A strip of n tiles joined by flexible bonds.
Assembly flexible_strip(int n) {
    Assembly a;
    std::vector<std::shared_ptr<TileType>> types;
    for (int i = 0; i < n; ++i) {
        auto t = std::make_shared<TileType>();
        t->id = "t" + std::to_string(i);
        types.push_back(t);
    }
    for (int i = 0; i + 1 < n; ++i) {
        std::string g = "g" + std::to_string(i);
        types[i]->glue(Side::E) = {{g, false}, 2, true};
        types[i + 1]->glue(Side::W) = {{g, true}, 2, true};
    }
    for (int i = 0; i < n; ++i) a.add_tile(i, types[i]);
    for (int i = 0; i + 1 < n; ++i) a.add_bond({i, Side::E}, {i + 1, Side::W}, true, 2);
    return a;
}

void BM_EnumerateStrip(benchmark::State& state) {
    auto a = flexible_strip(static_cast<int>(state.range(0)));
    std::size_t n = 0;
    for (auto _ : state) {
        auto r = enumerate_configs(a);
        n = r.configs.size();
        benchmark::DoNotOptimize(r);
    }
    state.counters["configs"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateStrip)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ValidateSat3(benchmark::State& state) {
    auto m = generate_sat3({{1, -2, 3}, {-1, 2, -3}}, Sat3Variant::Rigidity);
    auto c = sat_state_config(m, {{1, true}, {2, true}, {3, false}});
    for (auto _ : state) benchmark::DoNotOptimize(validate(m.assembly(), c));
    state.counters["tiles"] = static_cast<double>(m.assembly().size());
}
BENCHMARK(BM_ValidateSat3)->Unit(benchmark::kMicrosecond);

void BM_Sat3FactoredSearch(benchmark::State& state) {
    Cnf f{{1, 1, 1}, {-1, -1, -1}};
    if (state.range(0) == 1) f = {{1, -2, 3}, {-1, 2, -3}};
    auto m = generate_sat3(f, Sat3Variant::Rigidity);
    for (auto _ : state) benchmark::DoNotOptimize(sat3_factored_search(m, false));
}
BENCHMARK(BM_Sat3FactoredSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GenerateSat3(benchmark::State& state) {
    Cnf f;
    for (int j = 0; j < state.range(0); ++j) f.push_back({1 + j % 3, -(1 + (j + 1) % 3), 1 + (j + 2) % 3});
    for (auto _ : state) benchmark::DoNotOptimize(generate_sat3(f, Sat3Variant::Rigidity));
}
BENCHMARK(BM_GenerateSat3)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_RunPolycube(benchmark::State& state) {
    auto c = compile_polycube(Polycube{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}});
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_to_terminal(c.system, initial_state(c.system, seed++), 10000));
}
BENCHMARK(BM_RunPolycube)->Unit(benchmark::kMillisecond);

void BM_MinCut(benchmark::State& state) {
    auto c = compile_polycube(Polycube{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}});
    auto a = target_assembly(c.target, c.compiled.types);
    for (auto _ : state) benchmark::DoNotOptimize(min_cut_weight(a));
    state.counters["tiles"] = static_cast<double>(a.size());
}
BENCHMARK(BM_MinCut)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
