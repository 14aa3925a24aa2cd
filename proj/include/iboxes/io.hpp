#pragma once

#include "iboxes/engines.hpp"
#include "iboxes/random.hpp"
#include "iboxes/signed_word.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

namespace iboxes {

using json = nlohmann::json;

/// A parsed problem file: Cartan matrix, word, and the chain under study.
struct Problem {
  std::shared_ptr<const CartanMatrix> cartan;
  std::shared_ptr<const IWord> word;
  Chain chain;
};

/// All parse failures throw Error(Parse) with the offending field path.
CartanMatrix cartan_from_json(const json &j);
/// Needs the Cartan matrix for labels; `type` enables "involution":"auto".
IWord word_from_json(const json &j, std::shared_ptr<const CartanMatrix> cartan,
                     std::optional<std::pair<char, int>> type);
Problem problem_from_json(const json &j);
/// Throws Error(Parse) on malformed JSON text, with line/column.
json parse_json_text(const std::string &text);

json to_json(const CartanMatrix &c);
json to_json(const IWord &w);
json chain_to_json(const Chain &c);
json box_to_json(const IBox &box, const CartanMatrix &c);
/// Problem file reproducing an instance (explicit Cartan entries and letters).
json problem_to_json(const Chain &chain);

json to_json(const ExchangeMatrix &m);
ExchangeMatrix matrix_from_json(const json &j);

json to_json(const SignedWord &w);
SignedWord signed_word_from_json(const json &j, std::shared_ptr<const CartanMatrix> cartan);

json to_json(const Report &r);
Report report_from_json(const json &j);

json trace_to_json(const std::vector<MoveTraceStep> &trace, const CartanMatrix &c);

std::string to_csv(const ExchangeMatrix &m);
/// Quiver with frozen vertices as boxes. Skew-symmetric case: edge j->k per
/// positive entry labelled by multiplicity; otherwise labels "(|b_jk|,|b_kj|)".
std::string to_dot(const ExchangeMatrix &m);

/// JSON text with arrays of scalars kept on one line.
std::string pretty(const json &j);

} // namespace iboxes
