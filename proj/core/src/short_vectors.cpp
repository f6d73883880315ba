#include "cubiclat/short_vectors.hpp"

#include <algorithm>

#include "cubiclat/errors.hpp"
#include "cubiclat/linalg.hpp"

namespace cubiclat {

namespace {

// first nonzero coordinate positive; (v, -v) collapse onto one representative
void canonicalize(std::vector<Int>& v) {
  for (const Int& c : v) {
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      for (Int& x : v) x = -x;
    }
    return;
  }
}

Int norm_of(const IntMatrix& gram, const std::vector<Int>& v) {
  Int norm(0);
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(v[i]) == 0) continue;
    Int row(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) != 0) row += gram(i, j) * v[j];
    }
    norm += v[i] * row;
  }
  return norm;
}

ShortVectorList finalize(const IntMatrix& gram, const Int& bound,
                         std::vector<std::vector<Int>> found) {
  for (auto& v : found) canonicalize(v);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  ShortVectorList out{bound, {}};
  out.pairs.reserve(found.size());
  for (auto& v : found) {
    Int norm = norm_of(gram, v);
    out.pairs.emplace_back(std::move(v), std::move(norm));
  }
  return out;
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

ShortVectorList short_vectors(const IntMatrix& gram, const Int& bound) {
  if (sgn(bound) <= 0) throw Error("short_vectors: bound must be positive");
  const LDLResult ldl = ldl_decompose(gram);
  if (!ldl.positive_definite) {
    throw NotPositiveDefiniteError("short_vectors: form is not positive definite");
  }
  const std::size_t n = gram.rows();
  std::vector<std::vector<Int>> found;
  if (n == 0) return finalize(gram, bound, std::move(found));

  // With G = L D L^T the norm splits as
  //   sum_i D_i (x_i + c_i)^2,   c_i = sum_{j>i} L_{j,i} x_j,
  // so levels run from the last coordinate down, each with an exact
  // rational budget. Candidate ranges are probed outward from floor(-c):
  // the admissible t form a contiguous interval containing -c.
  std::vector<Int> x(n, Int(0));
  const auto descend = [&](auto&& self, std::size_t level_plus1,
                           const Rat& remaining) -> void {
    if (level_plus1 == 0) {
      bool nonzero = false;
      for (const Int& c : x) {
        if (sgn(c) != 0) {
          nonzero = true;
          break;
        }
      }
      if (nonzero) found.push_back(x);
      return;
    }
    const std::size_t i = level_plus1 - 1;
    Rat c(0);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(x[j]) != 0) c += ldl.lower[j][i] * Rat(x[j]);
    }
    const Rat& d = ldl.pivots[i];
    const auto admissible = [&](const Int& t) {
      Rat off = Rat(t) + c;
      return cmp(d * off * off, remaining) <= 0;
    };
    const Int center = floor_rat(-c);
    for (Int t = center; admissible(t); --t) {
      x[i] = t;
      Rat off = Rat(t) + c;
      self(self, i, remaining - d * off * off);
    }
    for (Int t = center + 1; admissible(t); ++t) {
      x[i] = t;
      Rat off = Rat(t) + c;
      self(self, i, remaining - d * off * off);
    }
    x[i] = 0;
  };
  descend(descend, n, Rat(bound));
  return finalize(gram, bound, std::move(found));
}

ShortVectorList brute_force_short_vectors(const IntMatrix& gram,
                                          const Int& bound, const Int& box) {
  if (sgn(bound) <= 0) throw Error("brute_force: bound must be positive");
  if (sgn(box) <= 0) throw Error("brute_force: box must be positive");
  if (!is_positive_definite(gram)) {
    throw NotPositiveDefiniteError("brute_force: form is not positive definite");
  }
  const std::size_t n = gram.rows();
  std::vector<std::vector<Int>> found;
  if (n == 0) return finalize(gram, bound, std::move(found));

  // Plain exhaustive scan of the box. partial = norm of the fixed prefix,
  // rowsum[k] = sum over fixed j of G(k,j) x_j, maintained incrementally so
  // the scan stays usable on small ranks; no pruning of any kind.
  std::vector<Int> x(n, Int(0));
  std::vector<Int> rowsum(n, Int(0));
  const auto scan = [&](auto&& self, std::size_t level,
                        const Int& partial) -> void {
    if (level == n) {
      bool nonzero = false;
      for (const Int& c : x) {
        if (sgn(c) != 0) {
          nonzero = true;
          break;
        }
      }
      if (nonzero && sgn(partial) > 0 && partial <= bound) found.push_back(x);
      return;
    }
    for (Int t = -box; t <= box; ++t) {
      x[level] = t;
      Int child = partial + t * t * gram(level, level) +
                  2 * t * rowsum[level];
      for (std::size_t k = level + 1; k < n; ++k) {
        rowsum[k] += t * gram(k, level);
      }
      self(self, level + 1, child);
      for (std::size_t k = level + 1; k < n; ++k) {
        rowsum[k] -= t * gram(k, level);
      }
    }
    x[level] = 0;
  };
  scan(scan, 0, Int(0));
  return finalize(gram, bound, std::move(found));
}

}  // namespace cubiclat
