#include "cubiclat/predicates.hpp"

#include "cubiclat/errors.hpp"

namespace cubiclat {

std::string_view to_string(TriState s) {
  switch (s) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    case TriState::FalseUpToBound: return "false_up_to_bound";
  }
  return "?";
}

bool check_star(const Int& d) {
  if (d < 8) return false;
  const Int r = d % 6;
  return r == 0 || r == 2;
}

DoubleStarResult check_double_star(const Int& d) {
  // a nonempty product of prime squares is exactly a square m^2 with m >= 2
  for (int residue : {0, 2}) {
    const Int base = d - residue;
    if (sgn(base) <= 0 || base % 6 != 0) continue;
    auto m = exact_sqrt(Int(base / 6));
    if (m && *m >= 2) return {true, *m};
  }
  return {false, std::nullopt};
}

bool check_assoc_k3(const Int& d) {
  if (d % 4 == 0 || d % 9 == 0) return false;
  Int rest = d;
  while (rest % 2 == 0) rest /= 2;
  for (Int p(3); p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    if (p % 3 == 2) return false;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1 && rest % 3 == 2) return false;
  return true;
}

BullesResult check_bulles(const Int& d) {
  for (Int f(1); f * f <= d; ++f) {
    if (d % (f * f) != 0) continue;
    const Int g = d / (f * f);
    for (Int n(0); n < g; ++n) {
      if ((2 * n * n + 2 * n + 2) % g == 0) {
        return {true, f, g, n};
      }
    }
  }
  return {false, std::nullopt, std::nullopt, std::nullopt};
}

RatioWitness check_llsvs(const Int& d, const Int& bound) {
  // 6n^2+6n+2 = d a^2  <=>  (6n+3)^2 = 6 d a^2 - 3
  RatioWitness out;
  out.bound = bound;
  for (Int a(1); a <= bound; ++a) {
    const Int s2 = 6 * d * a * a - 3;
    if (sgn(s2) < 0) continue;
    auto s = exact_sqrt(s2);
    if (!s || *s % 6 != 3) continue;
    const Int n = (*s - 3) / 6;
    if (n >= 0 && 6 * n * n + 6 * n + 2 == d * a * a) {
      out.status = TriState::True;
      out.n = n;
      out.a = a;
      return out;
    }
  }
  out.status = TriState::FalseUpToBound;
  return out;
}

FanoResult check_fano_hilb(const Int& d) {
  // 2(n^2+n+1) = d  <=>  (2n+1)^2 = 2d - 3
  const Int s2 = 2 * d - 3;
  if (sgn(s2) < 0) return {false, std::nullopt};
  auto s = exact_sqrt(s2);
  if (!s || *s % 2 != 1) return {false, std::nullopt};
  const Int n = (*s - 1) / 2;
  if (n >= 2 && 2 * (n * n + n + 1) == d) return {true, n};
  return {false, std::nullopt};
}

RatioWitness check_addington(const Int& d, const Int& bound) {
  // 2n^2+2n+2 = d a^2  <=>  (2n+1)^2 = 2 d a^2 - 3
  RatioWitness out;
  out.bound = bound;
  for (Int a(1); a <= bound; ++a) {
    const Int s2 = 2 * d * a * a - 3;
    if (sgn(s2) < 0) continue;
    auto s = exact_sqrt(s2);
    if (!s || *s % 2 != 1) continue;
    const Int n = (*s - 1) / 2;
    if (n >= 0 && 2 * n * n + 2 * n + 2 == d * a * a) {
      out.status = TriState::True;
      out.n = n;
      out.a = a;
      return out;
    }
  }
  out.status = TriState::FalseUpToBound;
  return out;
}

std::vector<Int> enumerate_double_star(const Int& max_d) {
  std::vector<Int> out;
  for (Int m(2); 6 * m * m <= max_d; ++m) {
    out.push_back(6 * m * m);
    if (6 * m * m + 2 <= max_d) out.push_back(6 * m * m + 2);
  }
  return out;
}

PredicateReport predicate_report(const Int& d, const Int& bound) {
  if (sgn(bound) <= 0) throw Error("predicate bound must be positive");
  PredicateReport r;
  r.d = d;
  r.star = check_star(d);
  r.double_star = check_double_star(d);
  r.assoc_k3 = check_assoc_k3(d);
  r.bulles = check_bulles(d);
  r.llsvs = check_llsvs(d, bound);
  r.fano_hilb = check_fano_hilb(d);
  r.addington = check_addington(d, bound);
  return r;
}

}  // namespace cubiclat
