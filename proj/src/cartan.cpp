#include "iboxes/cartan.hpp"

#include "iboxes/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

namespace iboxes {

std::optional<Color> CartanMatrix::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Color>(it - labels_.begin());
}

Color CartanMatrix::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw Error(ErrorKind::UnknownIndex, "label '" + std::string(label) +
                                           "' is not in the Cartan index set");
}

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> out(rank(), std::vector<int>(rank()));
  for (Color i = 0; i < rank(); ++i)
    for (Color j = 0; j < rank(); ++j) out[i][j] = (*this)(i, j);
  return out;
}

namespace {

struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Ratio reduced(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = std::gcd(num, den);
  return {num / g, den / g};
}

} // namespace

CartanMatrix validate_cartan(std::vector<std::string> labels,
                             const std::vector<std::vector<int>> &entries) {
  const std::size_t n = entries.size();
  if (n == 0) throw Error(ErrorKind::NotCartan, "empty table");
  if (labels.size() != n)
    throw Error(ErrorKind::NotCartan, "label count does not match table size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        throw Error(ErrorKind::NotCartan, "duplicate label '" + labels[i] + "'");

  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n)
      throw Error(ErrorKind::NotCartan, "row " + std::to_string(i) + " is not of length " +
                                            std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i][i] != 2)
      throw Error(ErrorKind::NotCartan, "diagonal entry (" + labels[i] + "," + labels[i] +
                                            ") is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries[i][j] > 0)
        throw Error(ErrorKind::NotCartan, "positive off-diagonal entry (" + labels[i] + "," +
                                              labels[j] + ")");
      if ((entries[i][j] == 0) != (entries[j][i] == 0))
        throw Error(ErrorKind::NotCartan, "zero pattern not symmetric at (" + labels[i] +
                                              "," + labels[j] + ")");
    }
  }

  // Breadth-first propagation of d_j / d_i = c_ij / c_ji inside each
  // component, then clear denominators and the component gcd.
  std::vector<Ratio> ratio(n);
  std::vector<int> component(n, -1);
  int ncomp = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    component[start] = ncomp;
    ratio[start] = {1, 1};
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || entries[i][j] == 0 || component[j] >= 0) continue;
        component[j] = ncomp;
        ratio[j] = reduced(ratio[i].num * entries[i][j], ratio[i].den * entries[j][i]);
        todo.push(j);
      }
    }
    ++ncomp;
  }

  std::vector<std::int64_t> d(n);
  for (int comp = 0; comp < ncomp; ++comp) {
    std::int64_t lcm = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == comp) lcm = std::lcm(lcm, ratio[i].den);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != comp) continue;
      d[i] = ratio[i].num * (lcm / ratio[i].den);
      g = std::gcd(g, d[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (component[i] == comp) d[i] /= g;
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i] * entries[i][j] != d[j] * entries[j][i])
        throw Error(ErrorKind::NotSymmetrizable,
                    "no positive diagonal D with DC symmetric (cycle through " + labels[i] +
                        "," + labels[j] + ")");

  CartanMatrix c;
  c.labels_ = std::move(labels);
  c.entries_.reserve(n * n);
  for (const auto &row : entries) c.entries_.insert(c.entries_.end(), row.begin(), row.end());
  c.symmetrizer_.assign(d.begin(), d.end());
  return c;
}

CartanMatrix validate_cartan(const std::vector<std::vector<int>> &entries) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < entries.size(); ++i) labels.push_back(std::to_string(i + 1));
  return validate_cartan(std::move(labels), entries);
}

namespace {

[[noreturn]] void unknown_type(char type, int rank) {
  throw Error(ErrorKind::UnknownType,
              std::string("no finite type ") + type + std::to_string(rank));
}

bool is_finite_type(char type, int rank) {
  switch (type) {
  case 'A': return rank >= 1;
  case 'B':
  case 'C': return rank >= 2;
  case 'D': return rank >= 4;
  case 'E': return rank >= 6 && rank <= 8;
  case 'F': return rank == 4;
  case 'G': return rank == 2;
  default: return false;
  }
}

} // namespace

CartanMatrix finite_type_cartan(char type, int rank) {
  if (!is_finite_type(type, rank)) unknown_type(type, rank);
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j, int cij = -1, int cji = -1) {
    c[i - 1][j - 1] = cij;
    c[j - 1][i - 1] = cji;
  };

  switch (type) {
  case 'A':
    for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
    break;
  case 'B':
    for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
    link(n - 1, n, -2, -1);
    break;
  case 'C':
    for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
    link(n - 1, n, -1, -2);
    break;
  case 'D':
    for (std::size_t i = 1; i + 2 < n; ++i) link(i, i + 1);
    link(n - 2, n - 1);
    link(n - 2, n);
    break;
  case 'E':
    link(1, 3);
    link(2, 4);
    for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
    break;
  case 'F':
    link(1, 2);
    link(2, 3, -2, -1);
    link(3, 4);
    break;
  case 'G':
    link(1, 2, -3, -1);
    break;
  }
  return validate_cartan(c);
}

DynkinInvolution::DynkinInvolution(std::vector<Color> map) : map_(std::move(map)) {
  for (Color i = 0; i < map_.size(); ++i) {
    if (map_[i] >= map_.size() || map_[map_[i]] != i)
      throw Error(ErrorKind::NotAPermutation, "map is not an involution of the index set");
  }
}

DynkinInvolution DynkinInvolution::identity(std::size_t n) {
  std::vector<Color> m(n);
  std::iota(m.begin(), m.end(), Color{0});
  return DynkinInvolution(std::move(m));
}

DynkinInvolution standard_involution(char type, int rank) {
  if (!is_finite_type(type, rank)) unknown_type(type, rank);
  const auto n = static_cast<std::size_t>(rank);
  auto m = DynkinInvolution::identity(n).map();
  if (type == 'A') {
    for (Color i = 0; i < n; ++i) m[i] = n - 1 - i;
  } else if (type == 'D' && n % 2 == 1) {
    std::swap(m[n - 2], m[n - 1]);
  } else if (type == 'E' && n == 6) {
    // 1 <-> 6, 3 <-> 5; nodes 2 and 4 fixed.
    std::swap(m[0], m[5]);
    std::swap(m[2], m[4]);
  }
  return DynkinInvolution(std::move(m));
}

bool is_diagram_automorphism(const CartanMatrix &c, const DynkinInvolution &star) {
  if (star.size() != c.rank()) return false;
  for (Color i = 0; i < c.rank(); ++i)
    for (Color j = 0; j < c.rank(); ++j)
      if (c(star(i), star(j)) != c(i, j)) return false;
  return true;
}

} // namespace iboxes
