#include "cubiclat/ambient.hpp"

#include <array>
#include <utility>

#include "cubiclat/errors.hpp"

namespace cubiclat {

namespace {

// adjacent basis-vector pairs of the E8 block, 1-based root indices
constexpr std::array<std::pair<int, int>, 7> kE8Adjacency = {
    {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}, {7, 8}}};

AmbientModel make_model() {
  AmbientModel m;
  m.gram = IntMatrix(kAmbientRank, kAmbientRank);

  for (int copy = 1; copy <= 2; ++copy) {
    for (int k = 1; k <= 8; ++k) m.gram(t_column(copy, k), t_column(copy, k)) = 2;
    for (auto [a, b] : kE8Adjacency) {
      m.gram(t_column(copy, a), t_column(copy, b)) = -1;
      m.gram(t_column(copy, b), t_column(copy, a)) = -1;
    }
  }
  for (int copy = 1; copy <= 2; ++copy) {
    m.gram(e_column(copy, 1), e_column(copy, 2)) = 1;
    m.gram(e_column(copy, 2), e_column(copy, 1)) = 1;
  }
  m.gram(a_column(1), a_column(1)) = 2;
  m.gram(a_column(2), a_column(2)) = 2;
  m.gram(a_column(1), a_column(2)) = 1;
  m.gram(a_column(2), a_column(1)) = 1;
  for (int j = 1; j <= 3; ++j) m.gram(f_column(j), f_column(j)) = 1;

  m.h2.assign(kAmbientRank, Int(0));
  for (int j = 1; j <= 3; ++j) m.h2[f_column(j)] = 1;

  m.names.reserve(kAmbientRank);
  for (int copy = 1; copy <= 2; ++copy) {
    for (int k = 1; k <= 8; ++k) {
      m.names.push_back("t" + std::to_string(copy) + "." + std::to_string(k));
    }
  }
  for (int copy = 1; copy <= 2; ++copy) {
    for (int k = 1; k <= 2; ++k) {
      m.names.push_back("e" + std::to_string(copy) + "." + std::to_string(k));
    }
  }
  m.names.push_back("a1");
  m.names.push_back("a2");
  m.names.push_back("f1");
  m.names.push_back("f2");
  m.names.push_back("f3");
  for (std::size_t c = 0; c < kAmbientRank; ++c) m.name_index[m.names[c]] = c;
  return m;
}

}  // namespace

const AmbientModel& build_ambient() {
  static const AmbientModel model = make_model();
  return model;
}

std::size_t t_column(int copy, int root) {
  return static_cast<std::size_t>(8 * (copy - 1) + (root - 1));
}

std::size_t e_column(int copy, int k) {
  return static_cast<std::size_t>(16 + 2 * (copy - 1) + (k - 1));
}

std::size_t a_column(int j) { return static_cast<std::size_t>(20 + (j - 1)); }

std::size_t f_column(int j) { return static_cast<std::size_t>(22 + (j - 1)); }

std::size_t column_of(std::string_view name) {
  const auto& model = build_ambient();
  auto it = model.name_index.find(name);
  if (it == model.name_index.end()) {
    throw UnknownBasisNameError("unknown basis name: '" + std::string(name) +
                                "'");
  }
  return it->second;
}

const std::string& name_of(std::size_t column) {
  const auto& model = build_ambient();
  if (column >= kAmbientRank) {
    throw UnknownBasisNameError("column out of range");
  }
  return model.names[column];
}

Int ambient_pairing(const std::vector<Int>& u, const std::vector<Int>& v) {
  if (u.size() != kAmbientRank || v.size() != kAmbientRank) {
    throw DimensionMismatchError("ambient vectors have 25 coordinates");
  }
  const IntMatrix& g = build_ambient().gram;
  Int out(0);
  for (std::size_t i = 0; i < kAmbientRank; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < kAmbientRank; ++j) {
      if (sgn(v[j]) == 0 || sgn(g(i, j)) == 0) continue;
      out += u[i] * g(i, j) * v[j];
    }
  }
  return out;
}

}  // namespace cubiclat
