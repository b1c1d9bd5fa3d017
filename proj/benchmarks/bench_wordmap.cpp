#include <random>

#include <benchmark/benchmark.h>

#include "wordmap/brute_oracle.hpp"
#include "wordmap/cayley.hpp"
#include "wordmap/fox.hpp"
#include "wordmap/gl_approx.hpp"
#include "wordmap/sl2.hpp"
#include "wordmap/symmetric_approx.hpp"

using namespace wordmap;

namespace {

void BM_ApproxSym(benchmark::State& state) {
  Word w = parse_word("[x,y]");
  std::mt19937_64 rng(1);
  Permutation target = random_permutation(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(approx(w, target));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApproxSym)->RangeMultiplier(4)->Range(64, 16384)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ClassifyCycleType(benchmark::State& state) {
  Field f = make_field_of_order(static_cast<std::uint64_t>(state.range(0)));
  SL2Elem g = SL2Elem::lower_unipotent(f.one()) * SL2Elem::upper_unipotent(f.element(2));
  for (auto _ : state) benchmark::DoNotOptimize(classify_cycle_type(g));
}
BENCHMARK(BM_ClassifyCycleType)->Arg(13)->Arg(101)->Arg(1009);

void BM_ProjectiveOrbits(benchmark::State& state) {
  Field f = make_field_of_order(static_cast<std::uint64_t>(state.range(0)));
  SL2Elem g = SL2Elem::lower_unipotent(f.one()) * SL2Elem::upper_unipotent(f.element(2));
  for (auto _ : state) benchmark::DoNotOptimize(projective_permutation(g).cycle_type());
}
BENCHMARK(BM_ProjectiveOrbits)->Arg(13)->Arg(101)->Arg(1009);

void BM_FoxDerivative(benchmark::State& state) {
  Word w = parse_word("[x,y]");
  for (int i = 1; i < state.range(0); ++i) w = commutator(w, parse_word(i % 2 ? "x y^2" : "y x^-1"));
  for (auto _ : state) benchmark::DoNotOptimize(abelianized_derivatives(w));
  state.counters["letters"] = static_cast<double>(w.letter_length());
}
BENCHMARK(BM_FoxDerivative)->DenseRange(1, 5);

void BM_CohomologyDefect(benchmark::State& state) {
  Word w = parse_word("[x^2,y^3]");
  auto q = cyclic_quotient(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_defect(build_d2(w, q)));
}
BENCHMARK(BM_CohomologyDefect)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_PowerBlockSplit(benchmark::State& state) {
  Field f = make_field(5, 1);
  FqPoly chi(f, {f.from_int(2), f.one(), f.zero(), f.one()});  // X^3 + X + 2
  for (auto _ : state) benchmark::DoNotOptimize(power_block_split(chi, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PowerBlockSplit)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ApproxGL(benchmark::State& state) {
  Field f = make_field(2, 1);
  auto n = static_cast<std::size_t>(state.range(0));
  MatrixFq a = MatrixFq::permutation_matrix(f, Permutation::long_cycle(n));
  Word w = parse_word("[x,y]");
  for (auto _ : state) benchmark::DoNotOptimize(approx_gl(w, a));
}
BENCHMARK(BM_ApproxGL)->Arg(7)->Arg(15)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_WordImageSym(benchmark::State& state) {
  Word w = parse_word("[x,y]");
  for (auto _ : state) benchmark::DoNotOptimize(word_image_sym(w, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_WordImageSym)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
