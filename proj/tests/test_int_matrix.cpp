#include "cubiclat/int_matrix.hpp"

#include <doctest.h>

#include "cubiclat/errors.hpp"

using namespace cubiclat;

TEST_CASE("construction and access") {
  IntMatrix m(2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(1, 2) == 0);
  m(1, 2) = Int("123456789012345678901234567890");
  CHECK(m(1, 2) == Int("123456789012345678901234567890"));
}

TEST_CASE("identity and equality") {
  CHECK(IntMatrix::identity(3) == IntMatrix::from_rows({{1, 0, 0},
                                                        {0, 1, 0},
                                                        {0, 0, 1}}));
  CHECK_FALSE(IntMatrix::identity(3) == IntMatrix::identity(2));
}

TEST_CASE("from_rows rejects ragged input") {
  std::vector<std::vector<Int>> rows = {{Int(1), Int(2)}, {Int(3)}};
  CHECK_THROWS_AS(IntMatrix::from_rows(rows), DimensionMismatchError);
}

TEST_CASE("product and transpose") {
  const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  const IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == IntMatrix::from_rows({{2, 1}, {4, 3}}));
  CHECK(a.transposed() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(a * IntMatrix(3, 2), DimensionMismatchError);
}

TEST_CASE("symmetry") {
  CHECK(IntMatrix::from_rows({{2, 1}, {1, 2}}).is_symmetric());
  CHECK_FALSE(IntMatrix::from_rows({{2, 1}, {0, 2}}).is_symmetric());
  CHECK_FALSE(IntMatrix(2, 3).is_symmetric());
}
