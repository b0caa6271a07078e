#include <benchmark/benchmark.h>

#include "subint/hilbert.hpp"
#include "subint/search.hpp"

using namespace subint;

namespace {

const Substitution kPqr = {{"A", parse("p")}, {"B", parse("q")}, {"C", parse("r")}};

void BM_ProveDistribution(benchmark::State& state) {
    const Sequent goal({}, {instantiate_scheme("7", kPqr)});
    for (auto _ : state) benchmark::DoNotOptimize(prove(SystemId::GWF, goal));
}
BENCHMARK(BM_ProveDistribution);

void BM_ProveTransitivity(benchmark::State& state) {
    const Sequent goal({}, {instantiate_scheme("I", kPqr)});
    SearchConfig cfg;
    cfg.max_depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(prove(SystemId::GWFI, goal, cfg));
}
BENCHMARK(BM_ProveTransitivity)->Arg(1)->Arg(2)->Arg(3);

void BM_ProveChain(benchmark::State& state) {
    Formulas ant;
    const auto n = static_cast<int>(state.range(0));
    for (int i = 0; i < n; ++i) {
        ant.push_back(Formula::imp(Formula::atom("a" + std::to_string(i)), Formula::atom("a" + std::to_string(i + 1))));
    }
    const Sequent goal(ant, {Formula::imp(Formula::atom("a0"), Formula::atom("a" + std::to_string(n)))});
    SearchConfig cfg;
    cfg.max_depth = static_cast<std::size_t>(n);
    for (auto _ : state) benchmark::DoNotOptimize(prove(SystemId::GWFI, goal, cfg));
}
BENCHMARK(BM_ProveChain)->DenseRange(2, 4);

void BM_RefuteInGwf(benchmark::State& state) {
    const Sequent goal({}, {instantiate_scheme("Dhat", kPqr)});
    for (auto _ : state) benchmark::DoNotOptimize(prove(SystemId::GWF, goal));
}
BENCHMARK(BM_RefuteInGwf);

}  // namespace
