#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "csl/convex_set.hpp"
#include "csl/interpretation.hpp"
#include "csl/rewrite.hpp"

namespace {

using namespace csl;

std::vector<Atom> atoms(std::size_t n) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back("a" + std::to_string(i));
  return out;
}

// `count` random points on the simplex over `n_atoms` atoms; denominators <= 12.
std::vector<Dist> random_points(std::size_t count, std::size_t n_atoms, unsigned seed) {
  std::mt19937 rng(seed);
  const auto names = atoms(n_atoms);
  std::vector<Dist> points;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::pair<Atom, Rational>> entries;
    std::int64_t left = 12;
    for (std::size_t k = 0; k + 1 < n_atoms; ++k) {
      const auto w = std::uniform_int_distribution<std::int64_t>(0, left)(rng);
      entries.emplace_back(names[k], Rational(w, 12));
      left -= w;
    }
    entries.emplace_back(names.back(), Rational(left, 12));
    points.push_back(dist_make(entries));
  }
  return points;
}

void BM_MemberOfHull(benchmark::State& state) {
  const auto gens = random_points(static_cast<std::size_t>(state.range(0)), 4, 1);
  const auto probe = random_points(1, 4, 2).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(member_of_hull(probe, std::span<const Dist>(gens)));
  }
}
BENCHMARK(BM_MemberOfHull)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_UniqueBase(benchmark::State& state) {
  const auto gens = random_points(static_cast<std::size_t>(state.range(0)), 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(unique_base(gens));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_UniqueBase)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_Minkowski(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = from_generators(random_points(n, 3, 4));
  const auto t = from_generators(random_points(n, 3, 5));
  for (auto _ : state) benchmark::DoNotOptimize(minkowski(Rational(1, 3), s, t));
}
BENCHMARK(BM_Minkowski)->Arg(2)->Arg(4)->Arg(8);

// Alternating mix/or spine of the given depth.
Term spine(std::size_t depth) {
  Term t = Term::choice(Term::leaf(Atom("x")), Term::leaf(Atom("y")));
  for (std::size_t i = 0; i < depth; ++i) {
    t = i % 2 == 0 ? Term::mix(Rational(1, 3), t, Term::choice(Term::leaf(Atom("y")), Term::leaf(Atom("z"))))
                   : Term::choice(t, Term::leaf(Atom("z")));
  }
  return t;
}

void BM_RewriteNp(benchmark::State& state) {
  const Term t = spine(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_np(t));
}
BENCHMARK(BM_RewriteNp)->DenseRange(2, 8, 2);

void BM_Canon(benchmark::State& state) {
  const Term t = spine(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canon(t));
}
BENCHMARK(BM_Canon)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
