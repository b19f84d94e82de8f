#include <benchmark/benchmark.h>

#include "sheafforge/golden.hpp"
#include "sheafforge/linspace.hpp"
#include "sheafforge/modification.hpp"

using namespace sheafforge;

namespace {

Presentation ideal_on(const RingPtr& r, const std::vector<std::string>& g) {
  std::vector<Polynomial> gens;
  for (const std::string& s : g) gens.push_back(r->parse(s));
  return presentation_of_ideal(r, gens);
}

void BM_Cyclic4Basis(benchmark::State& state) {
  RingPtr r = free_ring({"a", "b", "c", "d"});
  std::vector<std::string> g{"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b",
                             "a*b*c*d - 1"};
  for (auto _ : state) {
    Ideal i = Ideal::parse(r, g);
    benchmark::DoNotOptimize(i.basis().size());
  }
}
BENCHMARK(BM_Cyclic4Basis)->Unit(benchmark::kMillisecond);

void BM_Saturation(benchmark::State& state) {
  RingPtr r = free_ring({"x", "y", "z"});
  Ideal i = Ideal::parse(r, {"x^3*y - z^4", "x*z^2 - y^3", "x^2*y^2*z"});
  Polynomial f = r->parse("x*y*z");
  for (auto _ : state) benchmark::DoNotOptimize(saturate(i, f).exponent);
}
BENCHMARK(BM_Saturation)->Unit(benchmark::kMillisecond);

void BM_PrimaryComponent(benchmark::State& state) {
  Presentation p = ideal_on(free_ring({"x", "y"}), {"x^2", "x*y^2", "y^4"});
  for (auto _ : state) {
    PrimaryComponentIdeal pc = primary_component(linear_space_ideal(p));
    benchmark::DoNotOptimize(pc.exponent);
  }
}
BENCHMARK(BM_PrimaryComponent)->Unit(benchmark::kMillisecond);

void BM_Resolution(benchmark::State& state) {
  RingPtr r = free_ring({"x", "y", "z", "w"});
  Presentation k(r, 1, {Vec{r->var(0)}, Vec{r->var(1)}, Vec{r->var(2)}, Vec{r->var(3)}});
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(k, 8).ranks.size());
}
BENCHMARK(BM_Resolution)->Unit(benchmark::kMillisecond);

// Truncated sections of the pulled-back (x^3, y^3) by degree bound.
void BM_Sections(benchmark::State& state) {
  Modification m = blowup_origin(2);
  std::vector<Presentation> pb = pullback(ideal_on(m.base, {"x^3", "y^3"}), m);
  for (auto _ : state) {
    SectionsResult s = truncated_global_sections(pb, m, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(s.section_count);
  }
}
BENCHMARK(BM_Sections)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_CuspPushforward(benchmark::State& state) {
  Modification m = cusp_normalization();
  Presentation pulled = pullback(cusp_normalization_module(), m).front();
  for (auto _ : state) benchmark::DoNotOptimize(pushforward_finite(pulled, m).num_relations());
}
BENCHMARK(BM_CuspPushforward)->Unit(benchmark::kMillisecond);

void BM_VerifyPaper(benchmark::State& state) {
  GoldenOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_paper(o).ok());
}
BENCHMARK(BM_VerifyPaper)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
