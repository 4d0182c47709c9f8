// OpenMP product vs the serial reference on random elements of U(g).

#include <benchmark/benchmark.h>

#include <random>

#include "wsa/envelope.hpp"
#include "wsa/grading.hpp"

using namespace wsa;

namespace {

struct Input {
  PbwAlgebra U;
  Poly a, b;
};

Input make_input(const char* fam, int terms, int len) {
  auto gr = build_grading(parse_family(fam));
  std::vector<int> kw;
  for (int d : gr.deg) kw.push_back(d + 2);
  Input in{enveloping_algebra(gr.g, kw), {}, {}};
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> letter(0, in.U.size() - 1);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (Poly* p : {&in.a, &in.b})
    for (int t = 0; t < terms; ++t) {
      std::vector<int> w(len);
      for (int& x : w) x = letter(rng);
      poly_axpy(*p, in.U.word(w), Scalar(coeff(rng)));
    }
  return in;
}

template <bool Parallel>
void BM_mul(benchmark::State& state) {
  static const char* fams[] = {"spo:2|3", "spo:2|5", "sl:3|2"};
  Input in = make_input(fams[state.range(0)], static_cast<int>(state.range(1)), 3);
  for (auto _ : state) {
    state.PauseTiming();
    in.U.clear_memo();
    state.ResumeTiming();
    Poly p = Parallel ? in.U.mul(in.a, in.b) : in.U.mul_serial(in.a, in.b);
    benchmark::DoNotOptimize(p);
  }
  state.SetLabel(fams[state.range(0)]);
}

}  // namespace

BENCHMARK_TEMPLATE(BM_mul, true)->ArgsProduct({{0, 1, 2}, {16, 64}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_TEMPLATE(BM_mul, false)->ArgsProduct({{0, 1, 2}, {16, 64}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
