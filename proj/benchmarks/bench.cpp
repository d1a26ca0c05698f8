#include "reembed/fibers.hpp"
#include "reembed/problem.hpp"
#include "reembed/reembedding.hpp"
#include "reembed/ump.hpp"

#include <benchmark/benchmark.h>

using namespace reembed;

namespace {

ProblemFile load(const char* name) { return load_problem(std::string(REEMBED_DATA_DIR) + "/" + name); }

/// A chain x_i - a*x_{i+1} of length n closed by a^n*x_1*x_n + x_n^2, as in the
/// two-degree example but with n linear indeterminates.
IdealPresentation chain(std::size_t n) {
  std::vector<std::string> names{"a"};
  std::vector<std::int64_t> weights{0};
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    weights.push_back(1);
  }
  const GradedRing ring(names, weights);
  const Polynomial a = Polynomial::variable(0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i < n; ++i) gens.push_back(Polynomial::variable(i) - a * Polynomial::variable(i + 1));
  Polynomial an(1L);
  for (std::size_t i = 0; i < n; ++i) an *= a;
  gens.push_back(an * Polynomial::variable(1) * Polynomial::variable(n) + Polynomial::variable(n) * Polynomial::variable(n));
  return IdealPresentation(ring, gens);
}

std::vector<std::size_t> leading(std::size_t n) {
  std::vector<std::size_t> z;
  for (std::size_t i = 1; i < n; ++i) z.push_back(i);
  return z;
}

void BM_Substitution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto I = chain(n);
  const auto t = coherify(find_separating_tuple(I, leading(n)), I.ring());
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_eliminate(I, t.z, t.f));
}
BENCHMARK(BM_Substitution)->DenseRange(3, 7, 2);

void BM_EliminationOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto I = chain(n);
  for (auto _ : state) {
    const Ideal fresh(I.generators(), I.ring().size());
    benchmark::DoNotOptimize(eliminate_oracle(fresh, leading(n)));
  }
}
BENCHMARK(BM_EliminationOracle)->DenseRange(3, 7, 2);

void BM_FindSeparatingTuple(benchmark::State& state) {
  const auto pf = load("cvec_abxyz.problem");
  const auto I = pf.presentation();
  const std::vector<std::size_t> z{2, 3};
  for (auto _ : state) {
    const IdealPresentation fresh(I.ring(), I.generators());
    benchmark::DoNotOptimize(find_separating_tuple(fresh, z));
  }
}
BENCHMARK(BM_FindSeparatingTuple);

void BM_BestReembedding(benchmark::State& state) {
  const auto pf = load("two_degree_blocks.problem");
  for (auto _ : state) benchmark::DoNotOptimize(best_separating_reembedding(pf.presentation()));
}
BENCHMARK(BM_BestReembedding);

void BM_CotangentReport(benchmark::State& state) {
  const auto pf = load("free_regular.problem");
  const FiberPoint gamma{Rational(1), Rational(2)};
  for (auto _ : state) benchmark::DoNotOptimize(cotangent_report(pf.presentation(), gamma));
}
BENCHMARK(BM_CotangentReport);

void BM_UmpSolve(benchmark::State& state) {
  const auto pf = load("ump_univariate.problem");
  const auto& a = pf.matrices.at("A");
  for (auto _ : state) benchmark::DoNotOptimize(ump_solve(a));
}
BENCHMARK(BM_UmpSolve);

void BM_RegularFreeReembed(benchmark::State& state) {
  const auto pf = load("free_regular.problem");
  for (auto _ : state) benchmark::DoNotOptimize(regular_free_reembed(pf.presentation()));
}
BENCHMARK(BM_RegularFreeReembed);

}  // namespace

BENCHMARK_MAIN();
