#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cubiclat/integer.hpp"

namespace cubiclat {

// Dense row-major matrix of arbitrary-precision integers. Dimensions are
// fixed at construction; entries are mutable through operator().
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  // convenience for literals in tests and tables
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Int& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  std::vector<Int> row(std::size_t i) const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> e_;
};

// Exact product; throws DimensionMismatchError.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

}  // namespace cubiclat
