#include <benchmark/benchmark.h>

#include "mdeg/bracket.hpp"
#include "mdeg/polynomial.hpp"

namespace {

using namespace mdeg;

Polynomial dense_poly(int vars, int deg) {
  Polynomial p(vars);
  std::uint32_t counter = 1;
  for (int total = 0; total <= deg; ++total)
    for (int i = 0; i <= total; ++i) {
      Monomial m{std::vector<std::uint32_t>(vars, 0)};
      m.exps[0] = static_cast<std::uint32_t>(i);
      m.exps[1] = static_cast<std::uint32_t>(total - i);
      p += Polynomial::term(vars, std::move(m), Q(static_cast<long>(++counter % 7 + 1)));
    }
  return p;
}

void BM_Multiply(benchmark::State& state) {
  const auto a = dense_poly(3, static_cast<int>(state.range(0)));
  const auto b = dense_poly(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void BM_Power(benchmark::State& state) {
  const auto base = Polynomial::parse("x + z^2", 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(base.pow(static_cast<std::uint32_t>(state.range(0))));
}

void BM_Substitute(benchmark::State& state) {
  const auto g = dense_poly(2, 4);
  const std::vector<Polynomial> args{Polynomial::parse("x + z^2", 3),
                                     Polynomial::parse("y + z^3", 3)};
  for (auto _ : state) benchmark::DoNotOptimize(g.substitute(args));
}

void BM_Bracket(benchmark::State& state) {
  const auto f = dense_poly(3, 6);
  const auto g = dense_poly(3, 6) * Polynomial::parse("x - y + z", 3);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(f, g));
}

}  // namespace

BENCHMARK(BM_Multiply)->Arg(6)->Arg(12);
BENCHMARK(BM_Power)->Arg(10)->Arg(30);
BENCHMARK(BM_Substitute);
BENCHMARK(BM_Bracket);
