#include "cubiclat/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "cubiclat/errors.hpp"

namespace cubiclat {

namespace {

// floor quotient, exact remainder semantics of mpz_fdiv
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (sgn(q) == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (sgn(q) == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw NonSquareError("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(w(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(w(r, k)) == 0) ++r;
      if (r == n) return 0;
      swap_rows(w, k, r);
      sign = -sign;
    }
    // Bareiss step: every division below is exact
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w(i, j) = divexact(w(i, j) * w(k, k) - w(i, k) * w(k, j), prev);
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

HNFResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  HNFResult res{m, IntMatrix::identity(rows)};
  IntMatrix& h = res.H;
  IntMatrix& u = res.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // euclidean elimination below row r in column c
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == rows || cmp_abs(h(i, c), h(best, c)) < 0) best = i;
      }
      if (best == rows) break;  // column is zero from r down
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Int q = fdiv(h(i, c), h(r, c));
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (sgn(h(i, c)) != 0) clear = false;
      }
      if (clear) break;
    }
    if (sgn(h(r, c)) == 0) continue;  // no pivot in this column
    if (sgn(h(r, c)) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    // entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(h(i, c), h(r, c));
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  return res;
}

std::size_t rank(const IntMatrix& m) {
  const IntMatrix h = hnf(m).H;
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (sgn(h(i, j)) != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) ++r;
  }
  return r;
}

SNFResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SNFResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols), {}};
  IntMatrix& s = res.S;
  IntMatrix& u = res.U;
  IntMatrix& v = res.V;
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    // move the smallest nonzero entry of the trailing block to (t,t)
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(s(i, j)) == 0) continue;
        if (pi == rows || cmp_abs(s(i, j), s(pi, pj)) < 0) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;  // trailing block is zero
    swap_rows(s, t, pi);
    swap_rows(u, t, pi);
    swap_cols(s, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      bool retry = false;
      // clear column t
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(s(i, t)) == 0) continue;
        Int q = fdiv(s(i, t), s(t, t));
        row_axpy(s, i, t, q);
        row_axpy(u, i, t, q);
        if (sgn(s(i, t)) != 0) {  // remainder became the new, smaller pivot
          swap_rows(s, t, i);
          swap_rows(u, t, i);
          retry = true;
          break;
        }
      }
      if (retry) continue;
      // clear row t
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(s(t, j)) == 0) continue;
        Int q = fdiv(s(t, j), s(t, t));
        col_axpy(s, j, t, q);
        col_axpy(v, j, t, q);
        if (sgn(s(t, j)) != 0) {
          swap_cols(s, t, j);
          swap_cols(v, t, j);
          retry = true;
          break;
        }
      }
      if (retry) continue;
      // divisibility: the pivot must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
          if (sgn(s(i, j) % s(t, t)) != 0) {
            // fold row i into row t; the column stays clear since s(i,t)=0
            row_axpy(s, t, i, Int(-1));
            row_axpy(u, t, i, Int(-1));
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (sgn(s(t, t)) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }

  res.divisors.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) res.divisors.push_back(s(k, k));
  return res;
}

LDLResult ldl_decompose(const IntMatrix& gram) {
  if (!gram.is_square() || !gram.is_symmetric()) {
    throw NotSymmetricError("LDL needs a symmetric matrix");
  }
  const std::size_t n = gram.rows();
  LDLResult out;
  out.pivots.reserve(n);
  out.lower.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) out.lower[i].assign(i, Rat(0));

  for (std::size_t j = 0; j < n; ++j) {
    Rat d(gram(j, j));
    for (std::size_t k = 0; k < j; ++k) {
      d -= out.lower[j][k] * out.lower[j][k] * out.pivots[k];
    }
    if (sgn(d) <= 0) {
      out.positive_definite = false;
      out.completed = j;
      return out;
    }
    out.pivots.push_back(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat x(gram(i, j));
      for (std::size_t k = 0; k < j; ++k) {
        x -= out.lower[i][k] * out.lower[j][k] * out.pivots[k];
      }
      out.lower[i][j] = x / d;
    }
  }
  out.positive_definite = true;
  out.completed = n;
  return out;
}

bool is_positive_definite(const IntMatrix& gram) {
  return ldl_decompose(gram).positive_definite;
}

IntMatrix gram_transform(const IntMatrix& basis, const IntMatrix& gram) {
  if (!gram.is_square() || basis.cols() != gram.rows()) {
    throw DimensionMismatchError("gram_transform shape mismatch");
  }
  return basis * gram * basis.transposed();
}

bool is_saturated(const IntMatrix& basis) {
  if (rank(basis) != basis.rows()) {
    throw RankDeficientError("basis rows are linearly dependent");
  }
  for (const Int& d : snf(basis).divisors) {
    if (sgn(d) != 0 && d != 1) return false;
  }
  return true;
}

}  // namespace cubiclat
