#pragma once

#include <utility>
#include <vector>

#include "cubiclat/int_matrix.hpp"

namespace cubiclat {

// One representative per +-v pair, each with its first nonzero coordinate
// positive, sorted lexicographically. Exhaustive for the given bound.
struct ShortVectorList {
  Int bound;
  std::vector<std::pair<std::vector<Int>, Int>> pairs;  // (coords, norm)
};

// All v != 0 with 0 < v^T G v <= bound, by depth-first enumeration with
// exact rational LDL interval bounds (no floating point anywhere).
// Throws NotPositiveDefiniteError / NotSymmetricError.
ShortVectorList short_vectors(const IntMatrix& gram, const Int& bound);

// Independent oracle: plain exhaustive scan of the coefficient box
// |x_i| <= box. Callers are responsible for choosing a box that provably
// contains every solution. Same output contract and order as short_vectors.
ShortVectorList brute_force_short_vectors(const IntMatrix& gram,
                                          const Int& bound, const Int& box);

}  // namespace cubiclat
