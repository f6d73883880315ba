#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubiclat/ambient.hpp"
#include "cubiclat/int_matrix.hpp"

namespace cubiclat {

// One generator slot of the rank-21 construction. Slots 1 and 2 live in the
// hyperbolic planes (e^k_1 + n e^k_2), slots 3..20 are sqrt(n) multiples of
// a fixed A2 or E8 basis vector; a discriminant d == 2 (mod 6) additionally
// shifts the generator by one I3 unit vector, which raises the norm by 1 and
// makes it pair 1 with h2.
struct GeneratorSpec {
  int slot = 0;          // 1..20
  Int d;                 // discriminant, d >= 8, d == 0,2 (mod 6)
  Int n;                 // d/6 or (d-2)/6, derived
  Int multiplier;        // sqrt(n) for slots 3..20, else 1
  bool shifted = false;  // d == 2 (mod 6)

  // Validates and derives n / multiplier. Throws InvalidDiscriminantError,
  // NonSquareMultiplierError, SlotConstraintError.
  static GeneratorSpec for_slot(int slot, const Int& d);
};

// The I3 unit used for a shifted generator in each slot (auto mode),
// indexed by slot-1; values are 1..3 meaning f1..f3.
std::span<const int> auto_shift_table();

// Ambient coordinates (length 25) of the slot generator.
std::vector<Int> slot_generator(const GeneratorSpec& spec);

// Unshifted slot vector for parameter n: e^k_1 + n e^k_2 for slots 1..2,
// sqrt(n) times the slot's fixed A2/E8 direction for slots 3..20 (n must be
// a perfect square there). Building block for the reference cases, whose
// shift choices differ from the auto table.
std::vector<Int> slot_direction_vector(int slot, const Int& n);

struct SublatticeSpec {
  IntMatrix basis;          // (n+1) x 25; row 0 is h2
  std::vector<Int> tuple;   // d_1..d_n
  std::string mode;         // "auto" or an appendix case id
};

// h2 followed by slot_generator(k, d_k) for k = 1..n. Throws
// TupleTooLongError for n > 20 and propagates slot errors.
SublatticeSpec assemble_sublattice(std::span<const Int> tuple);

// Hardcoded reference constructions, generators exactly as tabulated for
// each case (per-case shift choices included). Parameters are the n_k; the
// discriminant tuple is derived as 6 n_k (+2 on shifted slots).
// Case ids: L3-C1..L3-C4, T4-C1..T4-C5, P20, T20.
// Throws UnknownCaseError, ParameterConstraintError.
SublatticeSpec appendix_case(std::string_view case_id,
                             std::span<const Int> params);

// All known appendix case ids, in a fixed presentation order.
std::span<const std::string_view> appendix_case_ids();

}  // namespace cubiclat
