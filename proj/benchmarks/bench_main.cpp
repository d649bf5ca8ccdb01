#include <benchmark/benchmark.h>

#include "fans.hpp"
#include "ivhs/jacobian.hpp"
#include "ivhs/nongenericity.hpp"
#include "ivhs/polytope.hpp"
#include "ivhs/symmetrizer.hpp"
#include "ivhs/toric.hpp"

using namespace ivhs;

namespace {

GenericityPolicy fermat() {
  GenericityPolicy p;
  p.source = SectionSource::Fermat;
  return p;
}

// Interior points of t times the standard 4-simplex.
void BM_InteriorCountSimplex(benchmark::State& state) {
  const LatticePolytope p = divisor_polytope(fans::projective(4), {{1, 0, 0, 0, 0}});
  const std::int64_t t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(interior_count(p, t));
}
BENCHMARK(BM_InteriorCountSimplex)->Arg(5)->Arg(8)->Arg(12);

void BM_EhrhartPolynomial(benchmark::State& state) {
  const LatticePolytope p = divisor_polytope(fans::p1xp3(), {{1, 1, 1, 1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart_polynomial(p));
}
BENCHMARK(BM_EhrhartPolynomial);

// One graded piece of the Jacobian ring of a degree-d hypersurface in P^4.
void BM_JacobianPiece(benchmark::State& state) {
  const ToricGrading g(fans::projective(4));
  const DegreeClass h = divisor_class(g, {{1, 0, 0, 0, 0}});
  const std::int64_t d = state.range(0);
  const bool random = state.range(1) != 0;
  const auto f = random ? random_section(g, h * d, 10, 1) : fermat_section(g, (h * d).key());
  const Arithmetic a = random ? Arithmetic::Modular : Arithmetic::Rational;
  for (auto _ : state) {
    QuotientSample ring(g, jacobian_generators(g, f), a, random ? prime_from_seed(1) : 0);
    benchmark::DoNotOptimize(ring.quotient_dim((h * d).key()));
  }
}
BENCHMARK(BM_JacobianPiece)->Args({5, 0})->Args({5, 1})->Args({6, 1})->Unit(benchmark::kMillisecond);

void BM_CheckToricFermat(benchmark::State& state) {
  const Fan fan = fans::projective(4);
  const std::int64_t t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(check_toric(fan, {{1, 0, 0, 0, 0}}, t, fermat()));
}
BENCHMARK(BM_CheckToricFermat)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SymmetrizerTrials(benchmark::State& state) {
  const auto g1 = static_cast<std::size_t>(state.range(0));
  const std::size_t d = generic_threshold(2, g1);
  for (auto _ : state) benchmark::DoNotOptimize(randomized_triviality_report(2, g1, 3, d, 4, 1));
}
BENCHMARK(BM_SymmetrizerTrials)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
