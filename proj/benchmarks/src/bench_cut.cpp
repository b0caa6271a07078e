#include <benchmark/benchmark.h>

#include "subint/hilbert.hpp"
#include "subint/search.hpp"
#include "subint/structural.hpp"

using namespace subint;

namespace {

Derivation proof(SystemId sys, const char* s) { return *prove(sys, parse_sequent(s)).proof; }

void BM_CutOnConjunction(benchmark::State& state) {
    const CutInstance c{proof(SystemId::GWF, "p & (q | r) => p & q | p & r"),
                        proof(SystemId::GWF, "p & q | p & r => p"), parse("p & q | p & r")};
    for (auto _ : state) benchmark::DoNotOptimize(eliminate_cut(SystemId::GWF, c));
}
BENCHMARK(BM_CutOnConjunction);

void BM_CutOnImplication(benchmark::State& state) {
    const SystemId sys = SystemId::GF;
    const CutInstance c{proof(sys, "p -> q, q -> r => p -> r"), proof(sys, "p -> r, p -> s => p -> r & s"),
                        parse("p -> r")};
    for (auto _ : state) benchmark::DoNotOptimize(eliminate_cut(sys, c));
}
BENCHMARK(BM_CutOnImplication);

void BM_HilbertRoundTrip(benchmark::State& state) {
    const Substitution s = {{"A", parse("p")}, {"B", parse("q")}, {"C", parse("r")}};
    const Derivation d = *prove(SystemId::GWF, Sequent({}, {instantiate_scheme("7", s)})).proof;
    for (auto _ : state) {
        const HilbertDerivation h = seq_to_hilbert(SystemId::GWF, d);
        benchmark::DoNotOptimize(hilbert_to_seq(HilbertSystemId::WF, h));
    }
}
BENCHMARK(BM_HilbertRoundTrip);

}  // namespace
