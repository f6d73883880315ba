#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubiclat/predicates.hpp"
#include "cubiclat/sublattice.hpp"

namespace cubiclat {

// One labelling K_d = <h2, g_i>: its 2x2 Gram inside M, its determinant,
// and whether the pair {h2, g_i} spans a primitive subgroup of M.
struct LabellingCheck {
  std::size_t index = 0;  // 1-based generator index
  IntMatrix gram2;
  Int discriminant;
  bool matches_d = false;
  bool saturated_in_m = false;
};

struct ChecksBlock {
  bool gram_integral_symmetric = false;
  std::size_t rank = 0;
  bool rank_at_most_21 = false;
  bool positive_definite = false;
  bool h2_norm_3 = false;
  Int min_nonzero_norm;  // 0 when enumeration was impossible
  bool no_norm2_vectors = false;
};

// Rank consequences for an associated K3 surface: a certified rank-(n+1)
// sublattice forces Neron-Severi rank >= n (capped at 20) as soon as one
// discriminant admits an associated K3.
struct K3Report {
  std::size_t rank_ax_lower_bound = 0;
  bool some_d_has_assoc_k3 = false;
  std::optional<std::size_t> ns_rank_lower_bound;  // present iff some_d...
  std::vector<std::size_t> witnesses;  // 1-based indices i with (*') on d_i
};

K3Report k3_report(std::span<const Int> tuple, std::size_t rank);

struct Certificate {
  std::string schema_version = "1";
  std::vector<Int> tuple;
  std::string mode;
  IntMatrix basis;  // (n+1) x 25, row 0 = h2
  IntMatrix gram;
  ChecksBlock checks;
  std::vector<LabellingCheck> labellings;
  K3Report k3;
  std::vector<PredicateReport> predicate_reports;
  std::vector<std::string> delegated_hypotheses;
  // informational only, never gates the verdict: count of +-pairs of norm-6
  // vectors in M orthogonal to h2
  Int norm6_orthogonal_h2_pairs;
  std::vector<std::string> failed_checks;

  bool passed() const { return failed_checks.empty(); }
};

// Full check battery on an assembled sublattice. predicate_bounds must be
// empty (defaults everywhere) or one bound per tuple entry.
Certificate certify_spec(const SublatticeSpec& spec,
                         std::span<const Int> predicate_bounds = {});

// Auto mode: validates feasibility first -- every d_i must satisfy (*) and
// d_3.. must satisfy (**). Throws TupleInfeasibleError (naming the first
// violated condition) or RankExceededError (more than 20 discriminants).
Certificate certify(std::span<const Int> tuple,
                    const Int& predicate_bound = Int(kDefaultSearchBound));

// Appendix-case mode; parameters as in appendix_case.
Certificate certify_case(std::string_view case_id, std::span<const Int> params,
                         const Int& predicate_bound = Int(kDefaultSearchBound));

struct VerifyResult {
  bool pass = false;
  std::vector<std::string> reasons;  // e.g. "gram_mismatch"
};

// Re-derives everything from the certificate's own basis coordinates and
// compares against the stored values. Needs nothing beyond the certificate
// and the fixed ambient model.
VerifyResult verify(const Certificate& stored);

struct SearchOptions {
  std::size_t count = 0;            // 1..20
  std::vector<Int> include;         // discriminants that must appear
  Int max_d = Int(10000);           // cap for slot-filling (**) values
  bool require_distinct = true;
  Int predicate_bound = Int(kDefaultSearchBound);
};

struct SearchResult {
  std::vector<Int> tuple;
  Certificate certificate;
};

// Deterministic: includes (sorted ascending) take the lowest-numbered
// feasible slots, remaining slots are filled with the smallest unused (**)
// values; candidates are tried in lexicographic order until a certificate
// passes. Throws InvalidIncludeError / InfeasibleError.
SearchResult search_tuple(const SearchOptions& options);

}  // namespace cubiclat
