#pragma once

#include "iboxes/chain.hpp"
#include "iboxes/exchange_matrix.hpp"
#include "iboxes/iword.hpp"
#include "iboxes/signed_word.hpp"

#include "oracle.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fixtures {

using namespace iboxes;

inline std::shared_ptr<const CartanMatrix> cartan(char type, int rank) {
  return std::make_shared<const CartanMatrix>(finite_type_cartan(type, rank));
}

/// A3, w0 = 1,2,3,1,2,1 (0-based colors 0,1,2,0,1,0), star i -> 4-i.
inline std::shared_ptr<const IWord> a3_word(Pos first = -3, Pos last = 4) {
  auto c = cartan('A', 3);
  const std::vector<Color> w0{0, 1, 2, 0, 1, 0};
  return std::make_shared<const IWord>(
      hat_w0_window(c, w0, standard_involution('A', 3), first, last));
}

inline Chain chain(const std::shared_ptr<const IWord> &w, Pos root, const std::string &ops) {
  return Chain(w, root, parse_ops(ops));
}

inline oracle::Word to_oracle(const IWord &w) {
  oracle::Word out{w.first(), {}};
  for (auto l : w.letters()) out.letters.push_back(static_cast<int>(l));
  return out;
}

inline std::vector<std::vector<int>> cartan_rows(const CartanMatrix &c) { return c.rows(); }

/// The library matrix as a dense table in its own row/column order.
inline oracle::Mat dense(const ExchangeMatrix &m) {
  oracle::Mat out(m.row_count(), std::vector<std::int64_t>(m.col_count()));
  for (std::size_t r = 0; r < m.row_count(); ++r)
    for (std::size_t c = 0; c < m.col_count(); ++c) out[r][c] = m.at_position(r, c);
  return out;
}

/// Oracle matrix of a chain: the signed-word formula on oracle boxes,
/// restricted to exchangeable columns.
struct OracleMatrix {
  std::vector<Index> rows, cols;
  oracle::Mat entries;
};

inline OracleMatrix oracle_matrix(const Chain &c) {
  const auto w = to_oracle(c.word());
  const std::string ops = to_string(c.ops());
  const auto bs = *oracle::boxes(w, c.root(), ops);
  const auto h = oracle::signed_word(bs, ops);
  const auto full = oracle::signed_matrix(h, c.word().cartan().rows());
  OracleMatrix out;
  for (std::size_t k = 1; k <= h.size(); ++k) out.rows.push_back(static_cast<Index>(k));
  for (auto k : oracle::exchangeable(h)) out.cols.push_back(static_cast<Index>(k));
  for (std::size_t j = 0; j < h.size(); ++j) {
    std::vector<std::int64_t> row;
    for (auto k : out.cols) row.push_back(full[j][static_cast<std::size_t>(k - 1)]);
    out.entries.push_back(std::move(row));
  }
  return out;
}

inline bool same(const ExchangeMatrix &m, const OracleMatrix &o) {
  return m.rows() == o.rows && m.cols() == o.cols && dense(m) == o.entries;
}

} // namespace fixtures
