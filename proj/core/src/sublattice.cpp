#include "cubiclat/sublattice.hpp"

#include <array>

#include "cubiclat/errors.hpp"
#include "cubiclat/predicates.hpp"

namespace cubiclat {

namespace {

// Slot -> fixed ambient direction for slots 3..20: a1, a2, then the two E8
// copies interleaved in the reference rank-21 ordering.
struct SlotDirection {
  char block;  // 'a' or 't'
  int copy;    // for 't'
  int index;   // a_j or t-root
};

constexpr std::array<SlotDirection, 18> kSlotDirections = {{
    {'a', 0, 1}, {'a', 0, 2},                            // slots 3, 4
    {'t', 1, 1}, {'t', 1, 3}, {'t', 1, 6},               // 5..7
    {'t', 2, 1}, {'t', 2, 3}, {'t', 2, 6},               // 8..10
    {'t', 1, 2}, {'t', 2, 2}, {'t', 1, 4}, {'t', 2, 4},  // 11..14
    {'t', 1, 7}, {'t', 2, 7}, {'t', 1, 8}, {'t', 2, 8},  // 15..18
    {'t', 1, 5}, {'t', 2, 5},                            // 19, 20
}};

// f-index used when the slot's discriminant is 2 mod 6, matching the
// all-shifted 20-generator reference list.
constexpr std::array<int, 20> kAutoShift = {2, 1, 1, 2, 3, 3, 1, 2, 3, 3,
                                            3, 3, 3, 1, 2, 2, 2, 2, 2, 2};

}  // namespace

std::span<const int> auto_shift_table() {
  return {kAutoShift.data(), kAutoShift.size()};
}

GeneratorSpec GeneratorSpec::for_slot(int slot, const Int& d) {
  if (slot < 1 || slot > 20) {
    throw SlotConstraintError("slot must be in 1..20");
  }
  if (!check_star(d)) {
    throw InvalidDiscriminantError("d = " + to_decimal(d) +
                                   " violates (*): need d >= 8, d = 0,2 mod 6");
  }
  GeneratorSpec spec;
  spec.slot = slot;
  spec.d = d;
  spec.shifted = (d % 6 == 2);
  spec.n = spec.shifted ? Int((d - 2) / 6) : Int(d / 6);
  if (slot <= 2) {
    const Int min_n = spec.shifted ? 1 : 2;
    if (spec.n < min_n) {
      throw SlotConstraintError("slot " + std::to_string(slot) + " needs n >= " +
                                to_decimal(min_n) + ", got " +
                                to_decimal(spec.n));
    }
    spec.multiplier = 1;
  } else {
    auto m = exact_sqrt(spec.n);
    if (!m) {
      throw NonSquareMultiplierError(
          "slot " + std::to_string(slot) + " needs n = d/6 or (d-2)/6 to be a "
          "perfect square; n = " + to_decimal(spec.n));
    }
    if (*m < 2) {
      throw SlotConstraintError("slot " + std::to_string(slot) +
                                " needs sqrt(n) >= 2, got " + to_decimal(*m));
    }
    spec.multiplier = *m;
  }
  return spec;
}

std::vector<Int> slot_direction_vector(int slot, const Int& n) {
  if (slot < 1 || slot > 20) {
    throw SlotConstraintError("slot must be in 1..20");
  }
  std::vector<Int> v(kAmbientRank, Int(0));
  if (slot <= 2) {
    v[e_column(slot, 1)] = 1;
    v[e_column(slot, 2)] = n;
    return v;
  }
  auto m = exact_sqrt(n);
  if (!m) {
    throw NonSquareMultiplierError("slot " + std::to_string(slot) +
                                   " needs square n, got " + to_decimal(n));
  }
  const SlotDirection& dir =
      kSlotDirections[static_cast<std::size_t>(slot - 3)];
  const std::size_t col = dir.block == 'a' ? a_column(dir.index)
                                           : t_column(dir.copy, dir.index);
  v[col] = *m;
  return v;
}

std::vector<Int> slot_generator(const GeneratorSpec& spec) {
  std::vector<Int> v = slot_direction_vector(spec.slot, spec.n);
  if (spec.shifted) {
    v[f_column(kAutoShift[static_cast<std::size_t>(spec.slot - 1)])] += 1;
  }
  return v;
}

SublatticeSpec assemble_sublattice(std::span<const Int> tuple) {
  if (tuple.empty()) throw Error("assemble_sublattice: empty tuple");
  if (tuple.size() > 20) {
    throw TupleTooLongError("at most 20 discriminants, got " +
                            std::to_string(tuple.size()));
  }
  std::vector<std::vector<Int>> rows;
  rows.reserve(tuple.size() + 1);
  rows.push_back(build_ambient().h2);
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    rows.push_back(
        slot_generator(GeneratorSpec::for_slot(static_cast<int>(k + 1),
                                               tuple[k])));
  }
  SublatticeSpec spec;
  spec.basis = IntMatrix::from_rows(rows);
  spec.tuple.assign(tuple.begin(), tuple.end());
  spec.mode = "auto";
  return spec;
}

}  // namespace cubiclat
