#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "tenhundred/analyzer.h"
#include "tenhundred/distfit.h"
#include "tenhundred/report.h"
#include "tenhundred/toolkit.h"

namespace tenhundred {
namespace {

DataPaths Paths() { return DataPaths::InDirectory(TENHUNDRED_BENCH_DATA_DIR); }

const Toolkit& Tk() {
  static const std::shared_ptr<const Toolkit> tk = Toolkit::Load(Paths());
  return *tk;
}

std::string Document(std::size_t words) {
  const std::vector<std::string>& pool = Tk().morphology().closure().ordered;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    text += i % 40 == 39 ? "xylophone" : pool[pick(rng)];
    text += i % 12 == 11 ? ". " : " ";
  }
  return text;
}

void BM_LoadAndBuildClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Toolkit::Load(Paths()));
}
BENCHMARK(BM_LoadAndBuildClosure)->Unit(benchmark::kMillisecond);

void BM_Check(benchmark::State& state) {
  std::string text = Document(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RunCheck(Tk(), text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Check)->Arg(1000)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  std::vector<Token> tokens =
      Tk().pipeline().normalize_and_tokenize(Document(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ClassifyStream(tokens, Tk().morphology()));
}
BENCHMARK(BM_Classify)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_FitPowerLaw(benchmark::State& state) {
  // Zipf-like counts: rank r gets about N / r.
  std::vector<std::uint64_t> counts;
  for (std::int64_t r = 1; r <= state.range(0); ++r) {
    counts.push_back(static_cast<std::uint64_t>(1 + 100000 / r));
  }
  CountSample sample(counts);
  for (auto _ : state) {
    PowerLawFit pl = FitPowerLaw(sample);
    benchmark::DoNotOptimize(
        LikelihoodRatioTest(sample, pl, FitExponential(sample, pl.xmin)));
  }
}
BENCHMARK(BM_FitPowerLaw)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tenhundred

BENCHMARK_MAIN();
