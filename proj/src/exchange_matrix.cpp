#include "iboxes/exchange_matrix.hpp"

#include "iboxes/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace iboxes {

namespace {

bool strictly_sorted(const std::vector<Index> &v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

std::int64_t positive_part(std::int64_t x) { return x > 0 ? x : 0; }

} // namespace

ExchangeMatrix::ExchangeMatrix(std::vector<Index> rows, std::vector<Index> cols,
                               std::vector<std::int64_t> entries,
                               std::vector<int> symmetrizer)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)),
      symmetrizer_(std::move(symmetrizer)) {
  if (!strictly_sorted(rows_) || !strictly_sorted(cols_))
    throw Error(ErrorKind::Inconsistent, "row and column labels must be strictly increasing");
  if (entries_.size() != rows_.size() * cols_.size())
    throw Error(ErrorKind::Inconsistent, "entry count does not match the shape");
  if (symmetrizer_.size() != rows_.size())
    throw Error(ErrorKind::Inconsistent, "symmetrizer length does not match the rows");
  for (auto d : symmetrizer_)
    if (d <= 0) throw Error(ErrorKind::Inconsistent, "symmetrizer entries must be positive");
  for (auto k : cols_)
    if (!std::binary_search(rows_.begin(), rows_.end(), k))
      throw Error(ErrorKind::Inconsistent,
                  "column " + std::to_string(k) + " is not a row label");
}

std::optional<std::size_t> ExchangeMatrix::row_position(Index i) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), i);
  if (it == rows_.end() || *it != i) return std::nullopt;
  return static_cast<std::size_t>(it - rows_.begin());
}

std::optional<std::size_t> ExchangeMatrix::col_position(Index k) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), k);
  if (it == cols_.end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - cols_.begin());
}

std::int64_t ExchangeMatrix::at(Index i, Index k) const {
  auto r = row_position(i);
  auto c = col_position(k);
  if (!r || !c)
    throw Error(ErrorKind::OutOfRange,
                "no entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
  return at_position(*r, *c);
}

int ExchangeMatrix::symmetrizer(Index i) const {
  auto r = row_position(i);
  if (!r) throw Error(ErrorKind::OutOfRange, "no row " + std::to_string(i));
  return symmetrizer_[*r];
}

ExchangeMatrix mutate(const ExchangeMatrix &z, Index k) {
  const auto kc = z.col_position(k);
  if (!kc)
    throw Error(ErrorKind::NotExchangeable, "index " + std::to_string(k) + " is not in K^ex");
  const auto kr = *z.row_position(k);
  const std::size_t nr = z.row_count(), nc = z.col_count();
  std::vector<std::int64_t> out(nr * nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      const auto zij = z.at_position(r, c);
      if (r == kr || c == *kc) {
        out[r * nc + c] = -zij;
        continue;
      }
      const auto zik = z.at_position(r, *kc);
      const auto zkj = z.at_position(kr, c);
      out[r * nc + c] = zij + positive_part(zik) * positive_part(zkj) -
                        positive_part(-zik) * positive_part(-zkj);
    }
  }
  return ExchangeMatrix(z.rows(), z.cols(), std::move(out), z.symmetrizer());
}

Permutation transposition(Index a, Index b) { return Permutation{{a, b}, {b, a}}; }

ExchangeMatrix permute(const ExchangeMatrix &z, const Permutation &sigma) {
  auto image = [&](Index i) {
    auto it = sigma.find(i);
    return it == sigma.end() ? i : it->second;
  };
  std::set<Index> seen;
  for (auto i : z.rows()) seen.insert(image(i));
  for (const auto &[from, to] : sigma) {
    if (!z.row_position(from) || !z.row_position(to))
      throw Error(ErrorKind::NotAPermutation,
                  "mapping " + std::to_string(from) + "->" + std::to_string(to) +
                      " leaves the row set");
  }
  if (seen.size() != z.row_count())
    throw Error(ErrorKind::NotAPermutation, "map is not injective on K");

  std::vector<Index> cols;
  for (auto k : z.cols()) cols.push_back(image(k));
  std::sort(cols.begin(), cols.end());

  const std::size_t nr = z.row_count(), nc = cols.size();
  std::vector<std::int64_t> out(nr * nc);
  std::vector<int> sym(nr);
  // The row label set is unchanged, only which label sits where.
  auto col_of = [&](Index k) {
    return static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), k) -
                                    cols.begin());
  };
  for (std::size_t r = 0; r < nr; ++r) {
    const auto nrow = *z.row_position(image(z.rows()[r]));
    sym[nrow] = z.symmetrizer()[r];
    for (std::size_t c = 0; c < z.col_count(); ++c)
      out[nrow * nc + col_of(image(z.cols()[c]))] = z.at_position(r, c);
  }
  return ExchangeMatrix(z.rows(), std::move(cols), std::move(out), std::move(sym));
}

SkewCheck check_skew_symmetrizable(const ExchangeMatrix &z) {
  for (auto i : z.cols()) {
    for (auto k : z.cols()) {
      const auto lhs = static_cast<std::int64_t>(z.symmetrizer(i)) * z.at(i, k);
      const auto rhs = -static_cast<std::int64_t>(z.symmetrizer(k)) * z.at(k, i);
      if (lhs != rhs) return SkewCheck{false, std::make_pair(i, k)};
    }
  }
  return {};
}

std::optional<std::pair<Index, Index>> first_difference(const ExchangeMatrix &x,
                                                        const ExchangeMatrix &y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.symmetrizer() != y.symmetrizer())
    return std::make_pair(Index{-1}, Index{-1});
  for (std::size_t r = 0; r < x.row_count(); ++r)
    for (std::size_t c = 0; c < x.col_count(); ++c)
      if (x.at_position(r, c) != y.at_position(r, c))
        return std::make_pair(x.rows()[r], x.cols()[c]);
  return std::nullopt;
}

} // namespace iboxes
