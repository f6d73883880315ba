#include <array>
#include <string>

#include "cubiclat/errors.hpp"
#include "cubiclat/sublattice.hpp"

namespace cubiclat {

namespace {

// Shift assignment per slot as tabulated for each case (0 = unshifted,
// 1..3 = f1..f3). Slot minima follow from shiftedness alone: slots 1,2 need
// n >= 2 unshifted / n >= 1 shifted, slots 3.. need n a square with
// sqrt(n) >= 2.
struct CaseDef {
  std::string_view id;
  std::vector<int> shifts;
};

const std::array<CaseDef, 11>& case_table() {
  static const std::array<CaseDef, 11> table = {{
      {"L3-C1", {0, 0, 0}},
      {"L3-C2", {0, 0, 3}},
      {"L3-C3", {0, 2, 3}},
      {"L3-C4", {1, 2, 3}},
      {"T4-C1", {0, 0, 0, 0}},
      {"T4-C2", {0, 0, 0, 3}},
      {"T4-C3", {0, 0, 2, 3}},
      {"T4-C4", {0, 1, 2, 3}},
      {"T4-C5", {1, 1, 2, 3}},
      {"P20", std::vector<int>(20, 0)},
      {"T20", {2, 1, 1, 2, 3, 3, 1, 2, 3, 3, 3, 3, 3, 1, 2, 2, 2, 2, 2, 2}},
  }};
  return table;
}

const CaseDef& lookup(std::string_view case_id) {
  for (const CaseDef& def : case_table()) {
    if (def.id == case_id) return def;
  }
  throw UnknownCaseError("unknown appendix case '" + std::string(case_id) +
                         "'");
}

}  // namespace

std::span<const std::string_view> appendix_case_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const CaseDef& def : case_table()) out.push_back(def.id);
    return out;
  }();
  return {ids.data(), ids.size()};
}

SublatticeSpec appendix_case(std::string_view case_id,
                             std::span<const Int> params) {
  const CaseDef& def = lookup(case_id);
  const std::size_t arity = def.shifts.size();
  if (params.size() != arity) {
    throw ParameterConstraintError(std::string(case_id) + " takes " +
                                   std::to_string(arity) + " parameters, got " +
                                   std::to_string(params.size()));
  }

  std::vector<std::vector<Int>> rows;
  rows.reserve(arity + 1);
  rows.push_back(build_ambient().h2);
  std::vector<Int> tuple;
  tuple.reserve(arity);

  for (std::size_t k = 0; k < arity; ++k) {
    const int slot = static_cast<int>(k + 1);
    const Int& n = params[k];
    const int shift = def.shifts[k];
    if (slot <= 2) {
      const Int min_n = shift != 0 ? 1 : 2;
      if (n < min_n) {
        throw ParameterConstraintError(
            std::string(case_id) + ": n_" + std::to_string(slot) + " must be >= " +
            to_decimal(min_n) + ", got " + to_decimal(n));
      }
    } else {
      auto m = exact_sqrt(n);
      if (!m || *m < 2) {
        throw ParameterConstraintError(
            std::string(case_id) + ": n_" + std::to_string(slot) +
            " must be a square of an integer >= 2, got " + to_decimal(n));
      }
    }
    std::vector<Int> v = slot_direction_vector(slot, n);
    if (shift != 0) v[f_column(shift)] += 1;
    rows.push_back(std::move(v));
    tuple.push_back(6 * n + (shift != 0 ? 2 : 0));
  }

  SublatticeSpec spec;
  spec.basis = IntMatrix::from_rows(rows);
  spec.tuple = std::move(tuple);
  spec.mode = std::string(case_id);
  return spec;
}

}  // namespace cubiclat
