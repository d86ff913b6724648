#include "lefschetz/cohomology.hpp"
#include "lefschetz/linalg.hpp"
#include "lefschetz/model.hpp"
#include "lefschetz/random.hpp"
#include "lefschetz/report.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace lefschetz;

QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(num(rng), den(rng));
  return m;
}

void BM_Rref(benchmark::State &state) {
  const QMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(20)->Arg(56);

SymplecticSample corpus_sample(const std::string &name) {
  const auto m = *find_corpus_model(name);
  const auto eq = parse_structure_equations(m.structure);
  return {eq, parse_form(m.omega, eq.dim, 2), name};
}

void BM_ValidateExample1(benchmark::State &state) {
  const auto s = corpus_sample("example1");
  for (auto _ : state) benchmark::DoNotOptimize(SymplecticStructure::validate(LieAlgebra::build(s.structure), s.omega));
}
BENCHMARK(BM_ValidateExample1)->Unit(benchmark::kMillisecond);

void BM_CohomologyExample1(benchmark::State &state) {
  const auto s = SymplecticStructure::validate(LieAlgebra::build(corpus_sample("example1").structure),
                                               corpus_sample("example1").omega);
  for (auto _ : state) benchmark::DoNotOptimize(SymplecticCohomology(s));
}
BENCHMARK(BM_CohomologyExample1)->Unit(benchmark::kMillisecond);

void BM_ReportExample1(benchmark::State &state) {
  const auto model = *find_corpus_model("example1");
  for (auto _ : state) benchmark::DoNotOptimize(to_json(run_compute(model)));
}
BENCHMARK(BM_ReportExample1)->Unit(benchmark::kMillisecond);

void BM_RandomSample(benchmark::State &state) {
  const int dim = static_cast<int>(state.range(0));
  SampleGenerator gen(5);
  const auto sample = gen.sample(dim);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        SymplecticCohomology(SymplecticStructure::validate(LieAlgebra::build(sample.structure), sample.omega)));
}
BENCHMARK(BM_RandomSample)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
