#include "iboxes/io.hpp"

#include "iboxes/error.hpp"

#include <algorithm>
#include <sstream>

namespace iboxes {

namespace {

[[noreturn]] void bad(const std::string &path, const std::string &why) {
  throw Error(ErrorKind::Parse, path + ": " + why);
}

const json &field(const json &obj, const char *key, const std::string &path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json &j, const std::string &path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string as_label(const json &j, const std::string &path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  bad(path, "expected an index label (string or integer)");
}

const json &as_array(const json &j, const std::string &path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::pair<Pos, Pos> interval(const json &j, const std::string &path) {
  if (!j.is_array() || j.size() != 2) bad(path, "expected [first, last]");
  const Pos a = as_int(j[0], path + "[0]"), b = as_int(j[1], path + "[1]");
  if (a > b) bad(path, "empty interval");
  return {a, b};
}

Color color_of(const CartanMatrix &c, const json &j, const std::string &path) {
  const auto label = as_label(j, path);
  auto idx = c.index_of(label);
  if (!idx) bad(path, "unknown index label '" + label + "'");
  return *idx;
}

std::vector<Index> index_list(const json &j, const std::string &path) {
  std::vector<Index> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i)
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

} // namespace

json parse_json_text(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

CartanMatrix cartan_from_json(const json &j) {
  const std::string path = "cartan";
  if (!j.is_object()) bad(path, "expected an object");
  if (j.contains("type")) {
    const auto &t = field(j, "type", path);
    if (!t.is_string() || t.get<std::string>().size() != 1) bad(path + ".type", "expected one letter");
    const auto rank = as_int(field(j, "rank", path), path + ".rank");
    return finite_type_cartan(t.get<std::string>()[0], static_cast<int>(rank));
  }
  const auto &rows = as_array(field(j, "entries", path), path + ".entries");
  std::vector<std::vector<int>> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto rpath = path + ".entries[" + std::to_string(r) + "]";
    std::vector<int> row;
    for (std::size_t c = 0; c < as_array(rows[r], rpath).size(); ++c)
      row.push_back(static_cast<int>(as_int(rows[r][c], rpath + "[" + std::to_string(c) + "]")));
    entries.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  if (j.contains("indices")) {
    const auto &idx = as_array(j["indices"], path + ".indices");
    for (std::size_t i = 0; i < idx.size(); ++i)
      labels.push_back(as_label(idx[i], path + ".indices[" + std::to_string(i) + "]"));
  } else {
    for (std::size_t i = 0; i < entries.size(); ++i) labels.push_back(std::to_string(i + 1));
  }
  return validate_cartan(std::move(labels), entries);
}

IWord word_from_json(const json &j, std::shared_ptr<const CartanMatrix> cartan,
                     std::optional<std::pair<char, int>> type) {
  const std::string path = "word";
  const auto [first, last] = interval(field(j, "window", path), path + ".window");
  if (j.contains("letters")) {
    const auto &ls = as_array(j["letters"], path + ".letters");
    if (static_cast<Pos>(ls.size()) != last - first + 1)
      bad(path + ".letters", "has " + std::to_string(ls.size()) +
                                 " letters but the window has length " +
                                 std::to_string(last - first + 1));
    std::vector<Color> letters;
    for (std::size_t i = 0; i < ls.size(); ++i)
      letters.push_back(color_of(*cartan, ls[i], path + ".letters[" + std::to_string(i) + "]"));
    return IWord(std::move(cartan), first, std::move(letters));
  }

  const auto &rw = as_array(field(j, "reduced_word", path), path + ".reduced_word");
  std::vector<Color> reduced;
  for (std::size_t i = 0; i < rw.size(); ++i)
    reduced.push_back(color_of(*cartan, rw[i], path + ".reduced_word[" + std::to_string(i) + "]"));

  const json inv = j.value("involution", json("auto"));
  std::optional<DynkinInvolution> star;
  if (inv.is_string() && inv.get<std::string>() == "auto") {
    if (!type) bad(path + ".involution", "\"auto\" needs a Cartan matrix given by type and rank");
    star = standard_involution(type->first, type->second);
  } else if (inv.is_string() && inv.get<std::string>() == "identity") {
    star = DynkinInvolution::identity(cartan->rank());
  } else if (inv.is_object()) {
    auto map = DynkinInvolution::identity(cartan->rank()).map();
    for (const auto &[from, to] : inv.items()) {
      const auto ipath = path + ".involution." + from;
      map[color_of(*cartan, json(from), ipath)] = color_of(*cartan, to, ipath);
    }
    try {
      star = DynkinInvolution(std::move(map));
    } catch (const Error &e) {
      bad(path + ".involution", e.what());
    }
  } else {
    bad(path + ".involution", "expected \"auto\", \"identity\" or an object");
  }
  return hat_w0_window(std::move(cartan), reduced, *star, first, last);
}

Problem problem_from_json(const json &j) {
  if (!j.is_object()) bad("problem", "expected an object");
  const auto &cj = field(j, "cartan", "problem");
  auto cartan = std::make_shared<const CartanMatrix>(cartan_from_json(cj));
  std::optional<std::pair<char, int>> type;
  if (cj.contains("type"))
    type = std::make_pair(cj["type"].get<std::string>()[0], static_cast<int>(cj["rank"].get<std::int64_t>()));

  auto word = std::make_shared<const IWord>(word_from_json(field(j, "word", "problem"), cartan, type));

  if (j.contains("chain")) {
    const auto &ch = j["chain"];
    const Pos root = as_int(field(ch, "root", "chain"), "chain.root");
    const auto &ops = field(ch, "ops", "chain");
    if (!ops.is_string()) bad("chain.ops", "expected a string of L/R");
    // built before the aggregate so a throwing constructor leaves nothing half-initialized
    Chain chain(word, root, parse_ops(ops.get<std::string>()));
    return Problem{cartan, word, std::move(chain)};
  }
  if (j.contains("range")) {
    const auto [a, b] = interval(j["range"], "range");
    Chain chain = initial_chain(word, a, b);
    return Problem{cartan, word, std::move(chain)};
  }
  bad("problem", "needs either \"chain\" or \"range\"");
}

json to_json(const CartanMatrix &c) {
  return json{{"indices", c.labels()}, {"entries", c.rows()}};
}

json to_json(const IWord &w) {
  json letters = json::array();
  for (auto c : w.letters()) letters.push_back(w.cartan().label(c));
  return json{{"window", {w.first(), w.last()}}, {"letters", letters}};
}

json chain_to_json(const Chain &c) {
  return json{{"root", c.root()}, {"ops", to_string(c.ops())}};
}

json box_to_json(const IBox &box, const CartanMatrix &c) {
  return json{{"a", box.a}, {"b", box.b}, {"color", c.label(box.color)}, {"order", box.order}};
}

json problem_to_json(const Chain &chain) {
  return json{{"cartan", to_json(chain.word().cartan())},
              {"word", to_json(chain.word())},
              {"chain", chain_to_json(chain)}};
}

json to_json(const ExchangeMatrix &m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.col_count(); ++c) row.push_back(m.at_position(r, c));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)},
              {"symmetrizer", m.symmetrizer()}};
}

ExchangeMatrix matrix_from_json(const json &j) {
  const std::string path = "matrix";
  auto rows = index_list(field(j, "rows", path), path + ".rows");
  auto cols = index_list(field(j, "cols", path), path + ".cols");
  const auto &ej = as_array(field(j, "entries", path), path + ".entries");
  if (ej.size() != rows.size()) bad(path + ".entries", "row count does not match \"rows\"");
  std::vector<std::int64_t> entries;
  for (std::size_t r = 0; r < ej.size(); ++r) {
    const auto rpath = path + ".entries[" + std::to_string(r) + "]";
    if (as_array(ej[r], rpath).size() != cols.size()) bad(rpath, "length does not match \"cols\"");
    for (std::size_t c = 0; c < cols.size(); ++c)
      entries.push_back(as_int(ej[r][c], rpath + "[" + std::to_string(c) + "]"));
  }
  std::vector<int> sym;
  for (auto d : index_list(field(j, "symmetrizer", path), path + ".symmetrizer"))
    sym.push_back(static_cast<int>(d));
  try {
    return ExchangeMatrix(std::move(rows), std::move(cols), std::move(entries), std::move(sym));
  } catch (const Error &e) {
    bad(path, e.what());
  }
}

json to_json(const SignedWord &w) {
  json letters = json::array();
  for (const auto &l : w.letters()) letters.push_back(json::array({l.sign, w.cartan().label(l.letter)}));
  return json{{"letters", letters}};
}

SignedWord signed_word_from_json(const json &j, std::shared_ptr<const CartanMatrix> cartan) {
  const std::string path = "signed_word.letters";
  const auto &ls = as_array(field(j, "letters", "signed_word"), path);
  std::vector<SignedLetter> letters;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto lpath = path + "[" + std::to_string(i) + "]";
    if (!ls[i].is_array() || ls[i].size() != 2) bad(lpath, "expected [sign, label]");
    const auto sign = as_int(ls[i][0], lpath + "[0]");
    if (sign != 1 && sign != -1) bad(lpath + "[0]", "sign must be 1 or -1");
    letters.push_back({static_cast<int>(sign), color_of(*cartan, ls[i][1], lpath + "[1]")});
  }
  return SignedWord(std::move(cartan), std::move(letters));
}

json to_json(const Report &r) {
  json checks = json::array();
  for (const auto &c : r.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"pass", r.pass()}, {"checks", checks}};
}

Report report_from_json(const json &j) {
  Report r;
  const auto &checks = as_array(field(j, "checks", "report"), "report.checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto cpath = "report.checks[" + std::to_string(i) + "]";
    const auto &c = checks[i];
    const auto &name = field(c, "name", cpath);
    const auto &pass = field(c, "pass", cpath);
    if (!name.is_string()) bad(cpath + ".name", "expected a string");
    if (!pass.is_boolean()) bad(cpath + ".pass", "expected a boolean");
    r.checks.push_back({name.get<std::string>(), pass.get<bool>(), c.value("detail", "")});
  }
  return r;
}

json trace_to_json(const std::vector<MoveTraceStep> &trace, const CartanMatrix &c) {
  json out = json::array();
  for (const auto &s : trace) {
    out.push_back(json{
        {"step", s.step},
        {"position", s.position},
        {"action", s.action == MoveTraceStep::Action::Mutate ? "mutate" : "permute"},
        {"colors", {c.label(s.left_color), c.label(s.right_color)}}});
  }
  return out;
}

std::string to_csv(const ExchangeMatrix &m) {
  std::ostringstream out;
  out << "row";
  for (auto k : m.cols()) out << ',' << k;
  out << '\n';
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    out << m.rows()[r];
    for (std::size_t c = 0; c < m.col_count(); ++c) out << ',' << m.at_position(r, c);
    out << '\n';
  }
  return out.str();
}

std::string to_dot(const ExchangeMatrix &m) {
  const bool skew_symmetric =
      std::all_of(m.symmetrizer().begin(), m.symmetrizer().end(), [](int d) { return d == 1; });
  std::ostringstream out;
  out << "digraph B {\n";
  for (auto i : m.rows())
    out << "  " << i << " [shape=" << (m.is_exchangeable(i) ? "circle" : "box") << "];\n";

  // |b_kj| from |b_jk| through the symmetrizer: d_j |b_jk| = d_k |b_kj|.
  auto mirror = [&](Index j, Index k, std::int64_t v) -> std::string {
    const std::int64_t num = m.symmetrizer(j) * v;
    if (num % m.symmetrizer(k) != 0) return "?";
    return std::to_string(num / m.symmetrizer(k));
  };
  auto edge = [&](Index from, Index to, const std::string &forward, const std::string &back) {
    out << "  " << from << " -> " << to << " [label=\"";
    if (skew_symmetric) out << forward;
    else out << '(' << forward << ',' << back << ')';
    out << "\"];\n";
  };
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    const Index j = m.rows()[r];
    for (std::size_t c = 0; c < m.col_count(); ++c) {
      const Index k = m.cols()[c];
      const auto v = m.at_position(r, c);
      if (v > 0) edge(j, k, std::to_string(v), mirror(j, k, v));
      // frozen rows have no column of their own, so their arrows into k come from here
      else if (v < 0 && !m.is_exchangeable(j)) edge(k, j, mirror(j, k, -v), std::to_string(-v));
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

void pretty_into(const json &j, int depth, std::string &out) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const std::string inner(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + json(it.key()).dump() + ": ";
      pretty_into(it.value(), depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const json &x) { return x.is_structured(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      pretty_into(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

} // namespace

std::string pretty(const json &j) {
  std::string out;
  pretty_into(j, 0, out);
  out += '\n';
  return out;
}

} // namespace iboxes
