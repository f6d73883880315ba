#include "cubiclat/linalg.hpp"

#include <doctest.h>

#include <random>

#include "cubiclat/ambient.hpp"
#include "cubiclat/errors.hpp"
#include "test_util.hpp"

using namespace cubiclat;
using testutil::random_matrix;
using testutil::random_symmetric;

namespace {

IntMatrix e8_gram() {
  const IntMatrix& g = build_ambient().gram;
  IntMatrix out(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) out(i, j) = g(i, j);
  }
  return out;
}

// independent oracle: cofactor expansion along the first row
Int det_by_minors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const Int term = m(0, j) * det_by_minors(minor);
    acc += (j % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && sgn(m(i, j)) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("determinant on the fixed blocks") {
  CHECK(determinant(e8_gram()) == 1);
  // 2*2 - 1*1 by direct cofactor expansion
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {1, 2}})) == 3);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(determinant(IntMatrix(4, 4)) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), NonSquareError);
}

TEST_CASE("determinant equals the SNF divisor product up to the op signs") {
  // E8: product of SNF divisors computed by the independent SNF route
  const IntMatrix g = e8_gram();
  const SNFResult s = snf(g);
  Int prod(1);
  for (const Int& d : s.divisors) prod *= d;
  CHECK(prod == 1);
  CHECK(determinant(g) * determinant(s.U) * determinant(s.V) == prod);
}

TEST_CASE("determinant vs cofactor oracle on random matrices") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
    const IntMatrix m = random_matrix(rng, n, n, -9, 9);
    CHECK(determinant(m) == det_by_minors(m));
  }
}

TEST_CASE("hnf worked examples") {
  const auto [h, u] = hnf(IntMatrix::from_rows({{2, 4}, {1, 1}}));
  CHECK(h == IntMatrix::from_rows({{1, 1}, {0, 2}}));
  CHECK(u * IntMatrix::from_rows({{2, 4}, {1, 1}}) == h);
  CHECK(abs(determinant(u)) == 1);

  CHECK(hnf(IntMatrix::identity(4)).H == IntMatrix::identity(4));
  CHECK(hnf(IntMatrix(1, 2)).H == IntMatrix(1, 2));
}

TEST_CASE("hnf postconditions on random matrices") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t r = 1 + static_cast<std::size_t>(rng() % 6);
    const std::size_t c = 1 + static_cast<std::size_t>(rng() % 6);
    const IntMatrix m = random_matrix(rng, r, c, -20, 20);
    const auto [h, u] = hnf(m);
    CHECK(u * m == h);
    CHECK(abs(determinant(u)) == 1);
    // echelon: pivot columns strictly increase; pivots positive; entries
    // above each pivot lie in [0, pivot)
    std::size_t last_col = 0;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t j = 0;
      while (j < c && sgn(h(i, j)) == 0) ++j;
      if (j == c) {
        seen_zero_row = true;
        continue;
      }
      CHECK_FALSE(seen_zero_row);
      if (i > 0) CHECK(j >= last_col + 1);
      last_col = j;
      CHECK(sgn(h(i, j)) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(sgn(h(k, j)) >= 0);
        CHECK(h(k, j) < h(i, j));
      }
    }
  }
}

TEST_CASE("snf worked examples") {
  const SNFResult s = snf(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(s.divisors == std::vector<Int>{Int(1), Int(6)});

  const SNFResult id = snf(IntMatrix::identity(3));
  CHECK(id.divisors == std::vector<Int>{Int(1), Int(1), Int(1)});

  const SNFResult zero = snf(IntMatrix(2, 3));
  CHECK(zero.divisors == std::vector<Int>{Int(0), Int(0)});

  // divisibility fix across the trailing block
  const SNFResult d46 = snf(IntMatrix::from_rows({{4, 0}, {0, 6}}));
  CHECK(d46.divisors == std::vector<Int>{Int(2), Int(12)});

  // negative entries never leak into the divisors
  const SNFResult neg = snf(IntMatrix::from_rows({{-2, 0}, {0, -3}}));
  CHECK(neg.divisors == std::vector<Int>{Int(1), Int(6)});
  CHECK(neg.U * IntMatrix::from_rows({{-2, 0}, {0, -3}}) * neg.V == neg.S);

  // rank-deficient rectangular
  const SNFResult wide = snf(IntMatrix::from_rows({{2, 4, 6}, {1, 2, 3}}));
  CHECK(wide.divisors == std::vector<Int>{Int(1), Int(0)});
}

TEST_CASE("snf postconditions on random matrices") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t r = 1 + static_cast<std::size_t>(rng() % 6);
    const std::size_t c = 1 + static_cast<std::size_t>(rng() % 6);
    const IntMatrix m = random_matrix(rng, r, c, -20, 20);
    const SNFResult s = snf(m);
    CHECK(s.U * m * s.V == s.S);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(is_diagonal(s.S));
    for (std::size_t k = 0; k + 1 < s.divisors.size(); ++k) {
      CHECK(sgn(s.divisors[k]) >= 0);
      if (sgn(s.divisors[k + 1]) != 0) {
        REQUIRE(sgn(s.divisors[k]) != 0);
        CHECK(s.divisors[k + 1] % s.divisors[k] == 0);
      }
    }
    if (r == c) {
      Int prod(1);
      for (const Int& d : s.divisors) prod *= d;
      CHECK(determinant(m) * determinant(s.U) * determinant(s.V) == prod);
    }
  }
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(e8_gram()));
  CHECK_FALSE(is_positive_definite(IntMatrix::from_rows({{0, 1}, {1, 0}})));
  CHECK(is_positive_definite(IntMatrix::from_rows(
      {{3, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 6, 0}, {0, 0, 0, 8}})));
  CHECK_THROWS_AS(is_positive_definite(IntMatrix::from_rows({{1, 2}, {3, 4}})),
                  NotSymmetricError);
  // singular PSD is not PD
  CHECK_FALSE(is_positive_definite(IntMatrix::from_rows({{1, 1}, {1, 1}})));
}

TEST_CASE("positive definiteness agrees with leading principal minors") {
  std::mt19937 rng(20231001);
  int positives = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
    const IntMatrix m = random_symmetric(rng, n, -9, 9);
    bool minors_positive = true;
    for (std::size_t k = 1; k <= n; ++k) {
      IntMatrix lead(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
      }
      if (sgn(determinant(lead)) <= 0) {
        minors_positive = false;
        break;
      }
    }
    if (minors_positive) ++positives;
    CHECK(is_positive_definite(m) == minors_positive);
  }
  CHECK(positives > 0);  // the sample must exercise both outcomes
}

TEST_CASE("gram_transform worked examples") {
  const AmbientModel& ambient = build_ambient();
  std::vector<Int> alpha1(kAmbientRank, Int(0));
  alpha1[e_column(1, 1)] = 1;
  alpha1[e_column(1, 2)] = 2;
  const IntMatrix b1 = IntMatrix::from_rows({ambient.h2, alpha1});
  CHECK(gram_transform(b1, ambient.gram) ==
        IntMatrix::from_rows({{3, 0}, {0, 4}}));

  CHECK(gram_transform(IntMatrix::identity(kAmbientRank), ambient.gram) ==
        ambient.gram);

  std::vector<Int> shifted(kAmbientRank, Int(0));
  shifted[a_column(2)] = 2;
  shifted[f_column(2)] = 1;
  const IntMatrix b2 = IntMatrix::from_rows({ambient.h2, shifted});
  CHECK(gram_transform(b2, ambient.gram) ==
        IntMatrix::from_rows({{3, 1}, {1, 9}}));

  CHECK_THROWS_AS(gram_transform(IntMatrix(2, 3), IntMatrix::identity(4)),
                  DimensionMismatchError);
}

TEST_CASE("gram_transform keeps symmetry") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 4);
    const std::size_t r = 1 + static_cast<std::size_t>(rng() % n);
    const IntMatrix g = random_symmetric(rng, n, -9, 9);
    const IntMatrix b = random_matrix(rng, r, n, -5, 5);
    CHECK(gram_transform(b, g).is_symmetric());
  }
}

TEST_CASE("saturation") {
  std::vector<Int> v(kAmbientRank, Int(0));
  v[e_column(1, 1)] = 1;
  v[e_column(1, 2)] = 2;
  CHECK(is_saturated(IntMatrix::from_rows({v})));

  std::vector<Int> w(kAmbientRank, Int(0));
  w[a_column(1)] = 2;
  CHECK_FALSE(is_saturated(IntMatrix::from_rows({w})));

  CHECK(is_saturated(IntMatrix::identity(4)));

  const IntMatrix dependent = IntMatrix::from_rows({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(is_saturated(dependent), RankDeficientError);
}
