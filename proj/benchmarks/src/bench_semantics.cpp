#include <benchmark/benchmark.h>

#include "subint/hilbert.hpp"
#include "subint/semantics.hpp"

using namespace subint;

namespace {

const Substitution kPqr = {{"A", parse("p")}, {"B", parse("q")}, {"C", parse("r")}};

void BM_CountermodelLazy(benchmark::State& state) {
    const Formula f = instantiate_scheme("I", kPqr);
    for (auto _ : state) benchmark::DoNotOptimize(countermodel({}, f));
}
BENCHMARK(BM_CountermodelLazy);

void BM_CountermodelExhaustive(benchmark::State& state) {
    const Formula f = instantiate_scheme("I", kPqr);
    for (auto _ : state) benchmark::DoNotOptimize(countermodel_exhaustive({}, f));
}
BENCHMARK(BM_CountermodelExhaustive);

void BM_NotFoundInClass(benchmark::State& state) {
    const Formula f = instantiate_scheme("C", kPqr);
    for (auto _ : state) benchmark::DoNotOptimize(countermodel({FrameProperty::Intersection}, f));
}
BENCHMARK(BM_NotFoundInClass);

void BM_EnumerateFrames(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_frames(2, {FrameProperty::Transitivity}));
}
BENCHMARK(BM_EnumerateFrames);

}  // namespace
