#include "cubiclat/sublattice.hpp"

#include <doctest.h>

#include <random>

#include "cubiclat/errors.hpp"
#include "cubiclat/linalg.hpp"

using namespace cubiclat;

namespace {

Int norm_of(const std::vector<Int>& v) { return ambient_pairing(v, v); }

IntMatrix spec_gram(const SublatticeSpec& spec) {
  return gram_transform(spec.basis, build_ambient().gram);
}

std::vector<Int> ints(std::initializer_list<long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("slot generator worked examples") {
  const auto& h2 = build_ambient().h2;

  const auto g1 = slot_generator(GeneratorSpec::for_slot(1, Int(12)));
  CHECK(g1[e_column(1, 1)] == 1);
  CHECK(g1[e_column(1, 2)] == 2);
  CHECK(norm_of(g1) == 4);
  CHECK(ambient_pairing(g1, h2) == 0);

  const auto g3 = slot_generator(GeneratorSpec::for_slot(3, Int(24)));
  CHECK(g3[a_column(1)] == 2);
  CHECK(norm_of(g3) == 8);

  const auto g4 = slot_generator(GeneratorSpec::for_slot(4, Int(26)));
  CHECK(g4[a_column(2)] == 2);
  CHECK(g4[f_column(2)] == 1);
  CHECK(norm_of(g4) == 9);
  CHECK(ambient_pairing(g4, h2) == 1);
}

TEST_CASE("slot generator errors") {
  CHECK_THROWS_AS(GeneratorSpec::for_slot(3, Int(8)), SlotConstraintError);
  CHECK_THROWS_AS(GeneratorSpec::for_slot(3, Int(30)),
                  NonSquareMultiplierError);
  CHECK_THROWS_AS(GeneratorSpec::for_slot(1, Int(10)),
                  InvalidDiscriminantError);
  CHECK_THROWS_AS(GeneratorSpec::for_slot(1, Int(6)),
                  InvalidDiscriminantError);
  CHECK_THROWS_AS(GeneratorSpec::for_slot(0, Int(12)), SlotConstraintError);
  CHECK_THROWS_AS(GeneratorSpec::for_slot(21, Int(12)), SlotConstraintError);
}

TEST_CASE("generator norm and h2-pairing invariants") {
  const auto& h2 = build_ambient().h2;
  std::mt19937 rng(314159);
  for (int iter = 0; iter < 300; ++iter) {
    const int slot = 1 + static_cast<int>(rng() % 20);
    Int d;
    if (slot <= 2) {
      d = 6 * Int(2 + static_cast<long>(rng() % 40));
      if (rng() % 2) d = 6 * Int(1 + static_cast<long>(rng() % 40)) + 2;
    } else {
      const Int m(2 + static_cast<long>(rng() % 15));
      d = 6 * m * m + (rng() % 2 ? 2 : 0);
    }
    const GeneratorSpec spec = GeneratorSpec::for_slot(slot, d);
    const auto g = slot_generator(spec);
    CHECK(norm_of(g) == 2 * spec.n + (spec.shifted ? 1 : 0));
    CHECK(ambient_pairing(g, h2) == (spec.shifted ? 1 : 0));
  }
}

TEST_CASE("assemble worked examples") {
  const SublatticeSpec s1 = assemble_sublattice(ints({12, 18, 24}));
  CHECK(spec_gram(s1) == IntMatrix::from_rows({{3, 0, 0, 0},
                                               {0, 4, 0, 0},
                                               {0, 0, 6, 0},
                                               {0, 0, 0, 8}}));
  CHECK(s1.mode == "auto");
  CHECK(s1.basis.row(0) == build_ambient().h2);

  const SublatticeSpec s2 = assemble_sublattice(ints({12, 12, 26}));
  CHECK(spec_gram(s2) == IntMatrix::from_rows({{3, 0, 0, 1},
                                               {0, 4, 0, 0},
                                               {0, 0, 4, 0},
                                               {1, 0, 0, 9}}));

  // cross term sqrt(n3*n4) between the two A2 slots
  const SublatticeSpec s3 = assemble_sublattice(ints({24, 24, 24, 24}));
  const IntMatrix g3 = spec_gram(s3);
  CHECK(g3(3, 4) == 4);
  CHECK(g3(4, 3) == 4);
  CHECK(g3(3, 3) == 8);
  CHECK(g3(4, 4) == 8);
}

TEST_CASE("assemble rank and errors") {
  const SublatticeSpec s = assemble_sublattice(ints({12, 8, 26}));
  CHECK(rank(s.basis) == 4);

  std::vector<Int> too_long(21, Int(24));
  CHECK_THROWS_AS(assemble_sublattice(too_long), TupleTooLongError);
  CHECK_THROWS_AS(assemble_sublattice(ints({12, 18, 30})),
                  NonSquareMultiplierError);  // slot 3 needs square n, 30/6=5
  // slot 2 takes any (*) value with n >= 2, so this one assembles fine
  CHECK_NOTHROW(assemble_sublattice(ints({12, 30, 24})));
}

TEST_CASE("appendix case L3-C3") {
  const SublatticeSpec s = appendix_case("L3-C3", ints({2, 1, 4}));
  CHECK(s.tuple == ints({12, 8, 26}));
  CHECK(spec_gram(s) == IntMatrix::from_rows({{3, 0, 1, 1},
                                              {0, 4, 0, 0},
                                              {1, 0, 3, 0},
                                              {1, 0, 0, 9}}));
}

TEST_CASE("appendix case T4-C5 as generated") {
  // both slot-1 and slot-2 generators carry the same f1 shift, which forces
  // the (1,2) cross term to 1; the commonly tabulated matrix has 0 there
  const SublatticeSpec s = appendix_case("T4-C5", ints({1, 1, 4, 4}));
  CHECK(s.tuple == ints({8, 8, 26, 26}));
  CHECK(spec_gram(s) == IntMatrix::from_rows({{3, 1, 1, 1, 1},
                                              {1, 3, 1, 0, 0},
                                              {1, 1, 3, 0, 0},
                                              {1, 0, 0, 9, 4},
                                              {1, 0, 0, 4, 9}}));
}

TEST_CASE("appendix parameter constraints") {
  CHECK_THROWS_AS(appendix_case("nope", ints({1, 2, 3})), UnknownCaseError);
  CHECK_THROWS_AS(appendix_case("L3-C1", ints({2, 2})),
                  ParameterConstraintError);  // arity
  CHECK_THROWS_AS(appendix_case("L3-C1", ints({1, 2, 4})),
                  ParameterConstraintError);  // n1 >= 2 unshifted
  CHECK_THROWS_AS(appendix_case("L3-C1", ints({2, 2, 5})),
                  ParameterConstraintError);  // n3 square
  CHECK_THROWS_AS(appendix_case("L3-C4", ints({0, 1, 4})),
                  ParameterConstraintError);  // n1 >= 1 shifted
  CHECK_NOTHROW(appendix_case("L3-C4", ints({1, 1, 4})));
}

TEST_CASE("P20 and T20 coincide with auto assembly") {
  std::vector<Int> params = {Int(2), Int(2)};
  std::vector<Int> tuple0 = {Int(12), Int(12)};
  std::vector<Int> params1 = {Int(1), Int(1)};
  std::vector<Int> tuple2 = {Int(8), Int(8)};
  for (long m = 2; m <= 19; ++m) {
    params.emplace_back(m * m);
    params1.emplace_back(m * m);
    tuple0.emplace_back(6 * m * m);
    tuple2.emplace_back(6 * m * m + 2);
  }
  const SublatticeSpec p20 = appendix_case("P20", params);
  CHECK(p20.tuple == tuple0);
  CHECK(spec_gram(p20) == spec_gram(assemble_sublattice(tuple0)));

  const SublatticeSpec t20 = appendix_case("T20", params1);
  CHECK(t20.tuple == tuple2);
  CHECK(spec_gram(t20) == spec_gram(assemble_sublattice(tuple2)));
  CHECK(rank(t20.basis) == 21);
}

TEST_CASE("case id listing") {
  const auto ids = appendix_case_ids();
  CHECK(ids.size() == 11);
  CHECK(ids.front() == "L3-C1");
  CHECK(ids.back() == "T20");
}

namespace {

// independent restatement of the cross-pairing recipe: A2 slots 3,4 pair
// +sqrt(n_i n_j), same-copy adjacent E8 slots pair -sqrt(n_i n_j), equal
// shifts add 1, h2 pairs 1 with shifted generators only
Int expected_entry(const std::vector<Int>& n, const std::vector<bool>& sh,
                   std::size_t i, std::size_t j) {
  static const int copy_of[] = {0, 0, 0, 0, 1, 1, 1, 2, 2, 2,
                                1, 2, 1, 2, 1, 2, 1, 2, 1, 2};
  static const int root_of[] = {0, 0, 1, 2, 1, 3, 6, 1, 3, 6,
                                2, 2, 4, 4, 7, 7, 8, 8, 5, 5};
  static const auto adjacent = [](int a, int b) {
    static const std::pair<int, int> adj[] = {{1, 2}, {2, 3}, {3, 4}, {3, 5},
                                              {5, 6}, {6, 7}, {7, 8}};
    for (auto [x, y] : adj) {
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  };
  static const int shift_of[] = {2, 1, 1, 2, 3, 3, 1, 2, 3, 3,
                                 3, 3, 3, 1, 2, 2, 2, 2, 2, 2};
  if (i == 0 && j == 0) return 3;
  if (i == j) return 2 * n[i - 1] + (sh[i - 1] ? 1 : 0);
  if (i == 0 || j == 0) {
    const std::size_t k = i + j;  // the nonzero index
    return sh[k - 1] ? 1 : 0;
  }
  Int entry(0);
  const Int prod = *exact_sqrt(n[i - 1] * n[j - 1]);
  if (i >= 3 && j >= 3) {
    if (copy_of[i - 1] == 0 && copy_of[j - 1] == 0) {
      entry += prod;
    } else if (copy_of[i - 1] == copy_of[j - 1] &&
               copy_of[i - 1] != 0 &&
               adjacent(root_of[i - 1], root_of[j - 1])) {
      entry -= prod;
    }
  }
  if (sh[i - 1] && sh[j - 1] && shift_of[i - 1] == shift_of[j - 1]) entry += 1;
  return entry;
}

}  // namespace

TEST_CASE("assembled gram follows the cross-pairing recipe on mixed tuples") {
  std::mt19937 rng(271828);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t count = 1 + static_cast<std::size_t>(rng() % 20);
    std::vector<Int> tuple;
    std::vector<Int> n;
    std::vector<bool> shifted;
    for (std::size_t k = 0; k < count; ++k) {
      const bool shift = rng() % 2 == 0;
      Int nk;
      if (k < 2) {
        nk = Int(2 + static_cast<long>(rng() % 30));
      } else {
        const long m = 2 + static_cast<long>(rng() % 12);
        nk = Int(m * m);
      }
      tuple.push_back(6 * nk + (shift ? 2 : 0));
      n.push_back(nk);
      shifted.push_back(shift);
    }
    const SublatticeSpec spec = assemble_sublattice(tuple);
    const IntMatrix g = spec_gram(spec);
    for (std::size_t i = 0; i <= count; ++i) {
      for (std::size_t j = 0; j <= count; ++j) {
        CHECK(g(i, j) == expected_entry(n, shifted, i, j));
      }
    }
  }
}
