#include <algorithm>

#include "cubiclat/certificate.hpp"
#include "cubiclat/errors.hpp"

namespace cubiclat {

namespace {

bool slot_accepts(int slot, const Int& d) {
  if (!check_star(d)) return false;
  const bool shifted = (d % 6 == 2);
  const Int n = shifted ? Int((d - 2) / 6) : Int(d / 6);
  if (slot <= 2) return n >= (shifted ? 1 : 2);
  auto m = exact_sqrt(n);
  return m && *m >= 2;
}

}  // namespace

SearchResult search_tuple(const SearchOptions& options) {
  if (options.count < 1 || options.count > 20) {
    throw InvalidIncludeError("count must be in 1..20");
  }
  if (options.include.size() > options.count) {
    throw InvalidIncludeError("more include values than slots");
  }
  const int count = static_cast<int>(options.count);

  // includes, ascending, greedily into the lowest-numbered feasible slot
  std::vector<Int> include = options.include;
  std::sort(include.begin(), include.end());
  if (options.require_distinct) {
    for (std::size_t i = 1; i < include.size(); ++i) {
      if (include[i] == include[i - 1]) {
        throw InvalidIncludeError("duplicate include value " +
                                  to_decimal(include[i]) +
                                  " with distinct values required");
      }
    }
  }
  std::vector<std::optional<Int>> slots(options.count);
  for (const Int& d : include) {
    if (!check_star(d)) {
      throw InvalidIncludeError("include value " + to_decimal(d) +
                                " violates (*)");
    }
    bool placed = false;
    for (int s = 1; s <= count && !placed; ++s) {
      if (!slots[static_cast<std::size_t>(s - 1)] && slot_accepts(s, d)) {
        slots[static_cast<std::size_t>(s - 1)] = d;
        placed = true;
      }
    }
    if (!placed) {
      throw InvalidIncludeError("no free slot accepts include value " +
                                to_decimal(d));
    }
  }

  std::size_t free_count = 0;
  for (std::size_t s = 0; s < options.count; ++s) {
    if (!slots[s]) ++free_count;
  }

  // candidate fill values: (**) members up to max_d, minus used includes
  std::vector<Int> pool;
  for (const Int& d : enumerate_double_star(options.max_d)) {
    if (options.require_distinct &&
        std::find(include.begin(), include.end(), d) != include.end()) {
      continue;
    }
    pool.push_back(d);
  }

  const std::size_t k = free_count;
  const std::size_t needed = options.require_distinct ? k : (k > 0 ? 1 : 0);
  if (pool.size() < needed) {
    throw InfeasibleError("not enough (**) values up to max_d = " +
                          to_decimal(options.max_d));
  }

  // try fill combinations in lexicographic order until a certificate passes
  std::vector<std::size_t> idx(k);
  if (options.require_distinct) {
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  } else {
    std::fill(idx.begin(), idx.end(), 0);
  }
  const auto advance = [&]() -> bool {
    if (k == 0) return false;
    if (options.require_distinct) {
      // next k-combination of pool indices; idx[i] maxes at |pool|-k+i
      std::size_t i = k;
      while (i-- > 0) {
        if (idx[i] < pool.size() - k + i) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          return true;
        }
      }
      return false;
    }
    // next multicombination (non-decreasing tuples over the pool)
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + 1 < pool.size()) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[i];
        return true;
      }
    }
    return false;
  };

  for (;;) {
    std::vector<Int> tuple;
    tuple.reserve(options.count);
    for (std::size_t s = 0, f = 0; s < options.count; ++s) {
      if (slots[s]) {
        tuple.push_back(*slots[s]);
      } else {
        tuple.push_back(pool[idx[f++]]);
      }
    }
    bool feasible = true;
    for (std::size_t s = 0; s < options.count; ++s) {
      if (!slot_accepts(static_cast<int>(s + 1), tuple[s])) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      Certificate cert = certify(tuple, options.predicate_bound);
      if (cert.passed()) {
        return SearchResult{std::move(tuple), std::move(cert)};
      }
    }
    if (!advance()) break;
  }
  throw InfeasibleError("no passing assignment within max_d = " +
                        to_decimal(options.max_d));
}

}  // namespace cubiclat
