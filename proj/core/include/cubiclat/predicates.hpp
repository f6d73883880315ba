#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cubiclat/integer.hpp"

namespace cubiclat {

// Arithmetic conditions on a discriminant d. Existential predicates return a
// witness that re-checks by direct substitution; predicates without a finite
// decision procedure are decided up to a search bound and say so.

enum class TriState { True, False, FalseUpToBound };

std::string_view to_string(TriState s);

// (*)  d >= 8 and d == 0,2 (mod 6)
bool check_star(const Int& d);

// (**) d = 6 m^2 or 6 m^2 + 2 for some m >= 2
struct DoubleStarResult {
  bool holds = false;
  std::optional<Int> m;
};
DoubleStarResult check_double_star(const Int& d);

// (*') 4 does not divide d, 9 does not divide d, and no odd prime
// p == 2 (mod 3) divides d. Deterministic trial division.
bool check_assoc_k3(const Int& d);

// (***) there are f, g with d = f^2 g and g | (2n^2 + 2n + 2) for some n.
// Decided exactly: f runs over square divisors, n over a full residue
// system mod g. Witness is the first hit in (f asc, n asc) order.
struct BullesResult {
  bool holds = false;
  std::optional<Int> f, g, n;
};
BullesResult check_bulles(const Int& d);

// (***') d = (6n^2 + 6n + 2) / a^2; searched for a = 1..bound.
struct RatioWitness {
  TriState status = TriState::FalseUpToBound;
  std::optional<Int> n, a;
  Int bound;
};
RatioWitness check_llsvs(const Int& d, const Int& bound);

// d = 2(n^2 + n + 1) with n >= 2; exact closed form.
struct FanoResult {
  bool holds = false;
  std::optional<Int> n;
};
FanoResult check_fano_hilb(const Int& d);

// d = (2n^2 + 2n + 2) / a^2; searched for a = 1..bound.
RatioWitness check_addington(const Int& d, const Int& bound);

// All (**) values <= max_d, ascending, no duplicates.
std::vector<Int> enumerate_double_star(const Int& max_d);

struct PredicateReport {
  Int d;
  bool star = false;
  DoubleStarResult double_star;
  bool assoc_k3 = false;
  BullesResult bulles;
  RatioWitness llsvs;
  FanoResult fano_hilb;
  RatioWitness addington;
};

inline constexpr long kDefaultSearchBound = 10000;

PredicateReport predicate_report(const Int& d,
                                 const Int& bound = Int(kDefaultSearchBound));

}  // namespace cubiclat
