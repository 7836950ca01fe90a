#include <benchmark/benchmark.h>

#include "theta2/linalg.hpp"
#include "theta2/registry.hpp"
#include "theta2/theta_qexp.hpp"

using namespace theta2;

namespace {

void BM_theta_expansion(benchmark::State& state) {
  int order = int(state.range(0));
  for (auto _ : state) {
    QSeries t = theta_constant_qexp(10, order);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_theta_expansion)->Arg(6)->Arg(10)->Arg(14);

void BM_series_mul(benchmark::State& state) {
  int order = int(state.range(0));
  QSeries a = theta_constant_qexp(1, order);
  for (int i = 0; i < 3; ++i) a = a * theta_constant_qexp(i + 2, order);
  QSeries b = a;
  for (auto _ : state) {
    QSeries p = a * b;
    benchmark::DoNotOptimize(p);
  }
  state.SetLabel(std::to_string(a.size()) + " terms");
}
BENCHMARK(BM_series_mul)->Arg(6)->Arg(8)->Arg(10);

void BM_series_div(benchmark::State& state) {
  int order = int(state.range(0));
  QSeries num = theta_constant_qexp(1, order) * theta_constant_qexp(2, order);
  QSeries den = theta_constant_qexp(1, order);
  for (auto _ : state) {
    QSeries q = num.divided_by(den);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_series_div)->Arg(6)->Arg(10);

void BM_bracket(benchmark::State& state) {
  int order = int(state.range(0));
  FormExpr x1 = named_form("x1"), c5 = named_form("chi5");
  eval(x1, order);
  eval(c5, order);
  for (auto _ : state) {
    // bracket arithmetic on fresh series (memo hits only the arguments)
    const auto& a = eval(x1, order);
    const auto& b = eval(c5, order);
    QSeries comp = a.comp(0) * b.comp(0).tau_derivative(QSeries::Deriv::d11);
    benchmark::DoNotOptimize(comp);
  }
}
BENCHMARK(BM_bracket)->Arg(6)->Arg(8);

void BM_modp_rank_phi(benchmark::State& state) {
  int order = int(state.range(0));
  std::vector<FormExpansion> scalars, gens;
  std::vector<FormExpansion> phis, mons;
  for (int i = 1; i <= 10; ++i)
    phis.push_back(eval(named_form("Phi" + std::to_string(i)), order));
  for (int a = 1; a <= 5; ++a)
    mons.push_back(eval(named_form("x" + std::to_string(a)), order));
  for (auto& m : mons)
    for (auto& p : phis) {
      scalars.push_back(m);
      gens.push_back(p);
    }
  for (auto _ : state) {
    long rank = modp_paired_rank(scalars, gens, 40);
    benchmark::DoNotOptimize(rank);
  }
}
BENCHMARK(BM_modp_rank_phi)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
