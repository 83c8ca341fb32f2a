#include <benchmark/benchmark.h>

#include "ineqcert/certifier.hpp"
#include "ineqcert/fraction.hpp"
#include "ineqcert/identities.hpp"
#include "ineqcert/interval.hpp"

using namespace ineqcert;

namespace {

Poly dense_poly(Mode m, int seed) {
  Poly p(m);
  for (int i = 0; i < 24; ++i) {
    int k = seed + i;
    p += Poly::term(m, (k % 7) - 3, k % 2, (k / 2) % 3, (k / 3) % 3, (k / 5) % 2,
                    (k / 7) % 3, (k / 11) % 3);
  }
  return p;
}

void BM_poly_multiply(benchmark::State& state) {
  Poly a = dense_poly(Mode::trig, 3), b = dense_poly(Mode::trig, 17);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_multiply);

void BM_poly_normal_form_power(benchmark::State& state) {
  Poly a = dense_poly(Mode::hyp, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a.pow(3));
}
BENCHMARK(BM_poly_normal_form_power);

void BM_interval_eval_G(benchmark::State& state) {
  Box3 b = Box3::make(Mode::trig, {1.0, 1.1}, {0.5, 1.5}, {0.5, 1.5});
  for (auto _ : state) benchmark::DoNotOptimize(eval_G_interval(b));
}
BENCHMARK(BM_interval_eval_G);

void BM_interval_eval_F_mv(benchmark::State& state) {
  Box3 b = Box3::make(Mode::hyp, {1.0, 1.1}, {1.5, 2.5}, {1.5, 2.5});
  for (auto _ : state) benchmark::DoNotOptimize(eval_F_mv(b));
}
BENCHMARK(BM_interval_eval_F_mv);

void BM_compact_eval(benchmark::State& state) {
  CompactBox b = CompactBox::make(Mode::trig, {1.0, 1.1}, {0.4, 0.5}, {0.9, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(eval_compact(b));
}
BENCHMARK(BM_compact_eval);

void BM_ledger_step(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_step(Mode::trig, "G1"));
}
BENCHMARK(BM_ledger_step);

void BM_small_branch_and_bound(benchmark::State& state) {
  CertifyConfig cfg = default_config(Mode::hyp);
  cfg.region = {1.0, 1.2, 0.3, 1.0, 0.3, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(certify_region(Mode::hyp, cfg));
}
BENCHMARK(BM_small_branch_and_bound);

void BM_tube_slice(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_tube_slice(Mode::hyp, {1.0, 1.01}, TubeSpec{}));
}
BENCHMARK(BM_tube_slice);

}  // namespace

BENCHMARK_MAIN();
