#include <benchmark/benchmark.h>

#include "folcheck/catalog.hpp"
#include "folcheck/forms.hpp"
#include "folcheck/ideal.hpp"
#include "folcheck/report.hpp"
#include "folcheck/textio.hpp"

using namespace folcheck;

static void BM_ParseOmega(benchmark::State& state) {
  const std::string text = printCanonical(namedForm("omega").form);
  for (auto _ : state) benchmark::DoNotOptimize(parseOneForm(text));
}
BENCHMARK(BM_ParseOmega);

static void BM_PrintOmega(benchmark::State& state) {
  const OneForm omega = namedForm("omega").form;
  for (auto _ : state) benchmark::DoNotOptimize(printCanonical(omega));
}
BENCHMARK(BM_PrintOmega);

static void BM_Integrability(benchmark::State& state) {
  const OneForm form = namedForm("corollary41").form;
  for (auto _ : state) benchmark::DoNotOptimize(isIntegrable(form));
}
BENCHMARK(BM_Integrability);

static void BM_GroebnerSingOmega(benchmark::State& state) {
  const Ideal sing = singularIdeal(namedForm("omega").form);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(sing));
}
BENCHMARK(BM_GroebnerSingOmega)->Unit(benchmark::kMillisecond);

static void BM_SingEquals(benchmark::State& state) {
  const Ideal sing = singularIdeal(namedForm("omega12").form);
  const Ideal claim = parseIdeal("union(ideal(z1, z2), ideal(z1, z4), ideal(z4, 2*z1*z3 - z2^2))");
  for (auto _ : state) benchmark::DoNotOptimize(varietyEquals(sing, claim));
}
BENCHMARK(BM_SingEquals)->Unit(benchmark::kMillisecond);

static void BM_VerifyPaper(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verifyPaperReport());
}
BENCHMARK(BM_VerifyPaper)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
