#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace iboxes {

/// Label of a row or column (an element of K).
using Index = std::int64_t;

/// Integer matrix indexed by K x K^ex, K^ex a subset of K.
///
/// Rows and columns are kept sorted by label. The symmetrizer is carried for
/// every row (not only for K^ex) so that it can be transported by
/// permutations and read off for frozen rows when rendering valued quivers.
class ExchangeMatrix {
public:
  /// entries is row-major, rows.size() x cols.size(). Throws Inconsistent on
  /// shape errors, unsorted or duplicate labels, cols not inside rows, or a
  /// non-positive symmetrizer entry.
  ExchangeMatrix(std::vector<Index> rows, std::vector<Index> cols,
                 std::vector<std::int64_t> entries, std::vector<int> symmetrizer);

  const std::vector<Index> &rows() const { return rows_; }
  const std::vector<Index> &cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  std::optional<std::size_t> row_position(Index i) const;
  std::optional<std::size_t> col_position(Index k) const;
  bool is_exchangeable(Index k) const { return col_position(k).has_value(); }

  /// Entry Z_ik. Throws OutOfRange.
  std::int64_t at(Index i, Index k) const;
  std::int64_t at_position(std::size_t r, std::size_t c) const {
    return entries_[r * cols_.size() + c];
  }
  std::span<const std::int64_t> entries() const { return entries_; }
  std::vector<std::int64_t> &mutable_entries() { return entries_; }

  int symmetrizer(Index i) const;
  const std::vector<int> &symmetrizer() const { return symmetrizer_; }

  bool operator==(const ExchangeMatrix &) const = default;

private:
  std::vector<Index> rows_;
  std::vector<Index> cols_;
  std::vector<std::int64_t> entries_;
  std::vector<int> symmetrizer_;
};

/// mu_k. Throws NotExchangeable when k is not a column.
ExchangeMatrix mutate(const ExchangeMatrix &z, Index k);

/// A bijection of K given as label -> image; unlisted labels are fixed.
using Permutation = std::map<Index, Index>;

Permutation transposition(Index a, Index b);

/// (sigma Z)_{sigma i, sigma j} = Z_ij. Throws NotAPermutation.
ExchangeMatrix permute(const ExchangeMatrix &z, const Permutation &sigma);

struct SkewCheck {
  bool ok = true;
  std::optional<std::pair<Index, Index>> violation;
};

/// D_ii Z_ik = -D_kk Z_ki on K^ex x K^ex.
SkewCheck check_skew_symmetrizable(const ExchangeMatrix &z);

/// First (row, col) where the matrices differ, or a (-1,-1) marker when the
/// index sets or symmetrizers differ; nullopt when equal.
std::optional<std::pair<Index, Index>> first_difference(const ExchangeMatrix &x,
                                                        const ExchangeMatrix &y);

} // namespace iboxes
