#pragma once

#include <cstddef>
#include <vector>

#include "cubiclat/int_matrix.hpp"

namespace cubiclat {

// Exact determinant by fraction-free (Bareiss) elimination.
// Throws NonSquareError.
Int determinant(const IntMatrix& m);

struct HNFResult {
  IntMatrix H;  // row-echelon Hermite form, H = U * M
  IntMatrix U;  // unimodular
};

// Row Hermite normal form: pivots positive, entries above a pivot reduced
// into [0, pivot).
HNFResult hnf(const IntMatrix& m);

// Row rank, via HNF.
std::size_t rank(const IntMatrix& m);

struct SNFResult {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix S;  // diagonal, S = U * M * V
  IntMatrix V;  // cols x cols, unimodular
  std::vector<Int> divisors;  // d1 | d2 | ..., trailing zeros allowed
};

SNFResult snf(const IntMatrix& m);

// Exact rational LDL^T of a symmetric matrix, attempted without pivoting.
// `pivots` holds the diagonal D up to `completed` columns; the attempt stops
// early when a pivot <= 0 appears (then positive_definite is false).
struct LDLResult {
  bool positive_definite = false;
  std::size_t completed = 0;
  std::vector<Rat> pivots;
  // lower[i][j] for j < i, unit diagonal implied
  std::vector<std::vector<Rat>> lower;
};

// Throws NotSymmetricError.
LDLResult ldl_decompose(const IntMatrix& gram);

// All LDL pivots > 0, equivalently all leading principal minors > 0.
// Throws NotSymmetricError.
bool is_positive_definite(const IntMatrix& gram);

// B (r x N), G (N x N) -> B * G * B^T. Throws DimensionMismatchError.
IntMatrix gram_transform(const IntMatrix& basis, const IntMatrix& gram);

// True iff the subgroup spanned by the rows of B is primitive in Z^N,
// i.e. every nonzero SNF divisor of B equals 1. The rows must be linearly
// independent; throws RankDeficientError otherwise.
bool is_saturated(const IntMatrix& basis);

}  // namespace cubiclat
