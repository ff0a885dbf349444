#include "phk/fitzpatrick.hpp"
#include "phk/lp.hpp"
#include "phk/portability.hpp"
#include "phk/representability.hpp"
#include "phk/sampling.hpp"

#include <benchmark/benchmark.h>

namespace {

using phk::Rational;
using phk::Vec;

phk::PartiallyOpenPolyhedron cube(std::size_t dim, bool open_face) {
  std::vector<phk::StrictRow> rows;
  for (std::size_t j = 0; j < dim; ++j) {
    rows.push_back({phk::unit(dim, j), Rational(1), open_face && j == 0});
    rows.push_back({phk::scale(Rational(-1), phk::unit(dim, j)), Rational(0), false});
  }
  return phk::PartiallyOpenPolyhedron::from_rows(dim, rows);
}

phk::LPProblem random_lp(phk::Rng &rng, std::size_t dim, std::size_t rows) {
  phk::LPProblem p{Vec(dim), {}};
  for (auto &c : p.objective)
    c = rng.integer(-3, 3);
  for (std::size_t i = 0; i < rows; ++i) {
    Vec a(dim);
    for (auto &x : a)
      x = rng.integer(-3, 3);
    p.rows.push_back({a, Rational(rng.integer(1, 6))});
  }
  return p;
}

void BM_LpSolve(benchmark::State &state) {
  phk::Rng rng(1);
  auto dim = static_cast<std::size_t>(state.range(0));
  std::vector<phk::LPProblem> problems;
  for (int i = 0; i < 32; ++i)
    problems.push_back(random_lp(rng, dim, 2 * dim + 2));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(phk::lp_solve(problems[i++ % problems.size()]));
}
BENCHMARK(BM_LpSolve)->Arg(2)->Arg(3)->Arg(6)->Arg(10);

void BM_PortableHull(benchmark::State &state) {
  auto c = cube(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state)
    benchmark::DoNotOptimize(phk::portable_hull(c));
}
BENCHMARK(BM_PortableHull)->Arg(2)->Arg(4)->Arg(6);

void BM_PhiNormalCone(benchmark::State &state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  phk::NormalConeFitzpatrick phi(cube(dim, true));
  phk::Rng rng(2);
  std::vector<std::pair<Vec, Vec>> pts;
  for (int i = 0; i < 64; ++i) {
    Vec x(dim), xs(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      x[j] = rng.rational(Rational(-1), Rational(2));
      xs[j] = rng.rational(Rational(-2), Rational(2));
    }
    pts.emplace_back(x, xs);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto &[x, xs] = pts[i++ % pts.size()];
    benchmark::DoNotOptimize(phi(x, xs));
  }
}
BENCHMARK(BM_PhiNormalCone)->Arg(2)->Arg(3)->Arg(6);

void BM_PhiOracle(benchmark::State &state) {
  auto dim = static_cast<std::size_t>(state.range(0));
  phk::FaceEnumerationOracle oracle(cube(dim, true));
  Vec x(dim, Rational(1, 2)), xs(dim, Rational(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle(x, xs));
}
BENCHMARK(BM_PhiOracle)->Arg(2)->Arg(3);

void BM_PsiSum(benchmark::State &state) {
  auto c = cube(2, false);
  phk::MonotoneGraph t(2, {{{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}},
                           {{Rational(1), Rational(0)}, {Rational(2), Rational(-1)}},
                           {{Rational(0), Rational(1)}, {Rational(0), Rational(1)}}});
  Vec x{Rational(1, 2), Rational(1, 2)}, xs{Rational(2), Rational(1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(phk::psi_sum(t, c, x, xs));
}
BENCHMARK(BM_PsiSum);

void BM_MaximalityReport(benchmark::State &state) {
  auto c = cube(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state)
    benchmark::DoNotOptimize(phk::ncmm_report(c, phk::SampleSpec{}));
}
BENCHMARK(BM_MaximalityReport)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
