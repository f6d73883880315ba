#include <benchmark/benchmark.h>

#include <random>

#include "cubiclat/ambient.hpp"
#include "cubiclat/certificate.hpp"
#include "cubiclat/linalg.hpp"
#include "cubiclat/short_vectors.hpp"
#include "cubiclat/sublattice.hpp"

using namespace cubiclat;

namespace {

IntMatrix e8_gram() {
  const IntMatrix& g = build_ambient().gram;
  IntMatrix out(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) out(i, j) = g(i, j);
  }
  return out;
}

std::vector<Int> rank21_params(long n1, long n2) {
  std::vector<Int> out = {Int(n1), Int(n2)};
  for (long m = 2; m <= 19; ++m) out.emplace_back(m * m);
  return out;
}

IntMatrix random_square(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  }
  return m;
}

void BM_ShortVectorsE8(benchmark::State& state) {
  const IntMatrix g = e8_gram();
  const Int bound(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(short_vectors(g, bound).pairs.size());
  }
}
BENCHMARK(BM_ShortVectorsE8)->Arg(2)->Arg(4)->Arg(8);

void BM_ShortVectorsRank21(benchmark::State& state) {
  const IntMatrix g = gram_transform(
      appendix_case("T20", rank21_params(1, 1)).basis, build_ambient().gram);
  for (auto _ : state) {
    benchmark::DoNotOptimize(short_vectors(g, Int(state.range(0))).pairs.size());
  }
}
BENCHMARK(BM_ShortVectorsRank21)->Arg(2)->Arg(6);

void BM_Snf6x6(benchmark::State& state) {
  std::mt19937 rng(1);
  const IntMatrix m = random_square(rng, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(m).divisors.size());
  }
}
BENCHMARK(BM_Snf6x6);

void BM_DeterminantRank21(benchmark::State& state) {
  const IntMatrix g = gram_transform(
      appendix_case("P20", rank21_params(2, 2)).basis, build_ambient().gram);
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant(g));
  }
}
BENCHMARK(BM_DeterminantRank21);

void BM_CertifyRank21(benchmark::State& state) {
  const auto params = rank21_params(1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_case("T20", params).passed());
  }
}
BENCHMARK(BM_CertifyRank21);

}  // namespace

BENCHMARK_MAIN();
