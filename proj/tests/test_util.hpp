#pragma once

#include <random>

#include "cubiclat/int_matrix.hpp"

namespace cubiclat::testutil {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                               std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  }
  return m;
}

inline IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, long lo,
                                  long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      long v = dist(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

// Diagonally dominant symmetric matrices are positive definite and keep the
// dual box bounds small, which the brute-force oracle needs.
inline IntMatrix random_positive_definite(std::mt19937& rng, std::size_t n,
                                          long diag_lo, long diag_hi,
                                          long off_range) {
  std::uniform_int_distribution<long> diag(diag_lo, diag_hi);
  std::uniform_int_distribution<long> off(-off_range, off_range);
  IntMatrix m(n, n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        long v = off(rng);
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      Int row_off(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) row_off += abs(m(i, j));
      }
      m(i, i) = row_off + diag(rng);
    }
    return m;
  }
}

}  // namespace cubiclat::testutil
