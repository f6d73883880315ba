#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cubiclat/int_matrix.hpp"

namespace cubiclat {

// The fixed rank-25 computation lattice E8 + E8 + U + U + A2 + I3, with the
// distinguished square-of-hyperplane vector h2 = f1 + f2 + f3 of norm 3.
//
// Column order (25 columns):
//   t1.1..t1.8, t2.1..t2.8, e1.1, e1.2, e2.1, e2.2, a1, a2, f1, f2, f3

inline constexpr std::size_t kAmbientRank = 25;

struct AmbientModel {
  IntMatrix gram;                               // 25 x 25, symmetric
  std::vector<Int> h2;                          // length 25
  std::vector<std::string> names;               // column -> name
  std::map<std::string, std::size_t, std::less<>> name_index;
};

// Deterministic and idempotent; returns the process-wide immutable model.
const AmbientModel& build_ambient();

// Column helpers. copy in {1,2}, root in 1..8, k in 1..2, j as labeled.
std::size_t t_column(int copy, int root);
std::size_t e_column(int copy, int k);
std::size_t a_column(int j);
std::size_t f_column(int j);

// Throws UnknownBasisNameError.
std::size_t column_of(std::string_view name);
const std::string& name_of(std::size_t column);

// Pairing of two coordinate vectors under the ambient form.
Int ambient_pairing(const std::vector<Int>& u, const std::vector<Int>& v);

}  // namespace cubiclat
