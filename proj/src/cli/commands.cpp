#include "iboxes/cli.hpp"

#include "iboxes/batch.hpp"
#include "iboxes/error.hpp"
#include "iboxes/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace iboxes {

namespace {

std::string read_all(const std::string &file, std::istream &in) {
  if (file == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(file, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot open '" + file + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Problem load_problem(const std::string &file, std::istream &in) {
  return problem_from_json(parse_json_text(read_all(file, in)));
}

std::string box_text(const IBox &box, const CartanMatrix &c) {
  std::ostringstream s;
  if (box.a == box.b) s << '[' << box.a << ']';
  else s << '[' << box.a << ',' << box.b << ']';
  s << '_' << c.label(box.color);
  return s.str();
}

std::string signed_text(const SignedWord &w) {
  std::string out;
  for (const auto &l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += (l.sign > 0 ? "+" : "-") + w.cartan().label(l.letter);
  }
  return out;
}

template <class T> std::string joined(const std::vector<T> &xs) {
  std::string out;
  for (const auto &x : xs) {
    if (!out.empty()) out += ' ';
    if constexpr (std::is_convertible_v<T, std::string>) out += x;
    else out += std::to_string(x);
  }
  return out;
}

json info_json(const Chain &chain) {
  const auto &c = chain.word().cartan();
  json boxes = json::array();
  for (std::size_t k = 1; k <= chain.length(); ++k) {
    json b = box_to_json(chain.box(k), c);
    b["k"] = k;
    const auto [lo, hi] = chain.envelope(k);
    b["envelope"] = {lo, hi};
    b["effective_end"] = effective_end(chain, k);
    b["op"] = k == 1 ? "" : std::string(1, static_cast<char>(chain.op(k - 1)));
    boxes.push_back(std::move(b));
  }
  const auto split = frozen_indices(chain);
  const auto [a, b] = chain.range();
  return json{{"cartan", to_json(c)},
              {"symmetrizer", std::vector<int>(c.symmetrizer().begin(), c.symmetrizer().end())},
              {"word", to_json(chain.word())},
              {"chain", chain_to_json(chain)},
              {"range", {a, b}},
              {"boxes", std::move(boxes)},
              {"frozen", split.frozen},
              {"exchangeable", split.exchangeable},
              {"signed_word", to_json(signed_word_of_chain(chain))}};
}

void info_text(const Chain &chain, std::ostream &out) {
  const auto &c = chain.word().cartan();
  out << "indices: " << joined(c.labels()) << '\n';
  out << "cartan:\n";
  for (const auto &row : c.rows()) out << "  " << joined(row) << '\n';
  out << "symmetrizer: "
      << joined(std::vector<int>(c.symmetrizer().begin(), c.symmetrizer().end())) << '\n';
  std::vector<std::string> letters;
  for (auto l : chain.word().letters()) letters.push_back(c.label(l));
  out << "word: [" << chain.word().first() << ',' << chain.word().last()
      << "] " << joined(letters) << '\n';
  const auto [a, b] = chain.range();
  out << "chain: root " << chain.root() << ", ops " << to_string(chain.ops()) << ", range ["
      << a << ',' << b << "]\n";
  for (std::size_t k = 1; k <= chain.length(); ++k) {
    const auto &box = chain.box(k);
    const auto [lo, hi] = chain.envelope(k);
    out << "  c" << k << " = " << box_text(box, c) << "  order " << box.order << "  envelope ["
        << lo << ',' << hi << "]  end " << effective_end(chain, k);
    if (k > 1) out << "  " << static_cast<char>(chain.op(k - 1));
    out << '\n';
  }
  const auto split = frozen_indices(chain);
  out << "frozen:" << (split.frozen.empty() ? "" : " ") << joined(split.frozen) << '\n';
  out << "exchangeable:" << (split.exchangeable.empty() ? "" : " ") << joined(split.exchangeable) << '\n';
  out << "signed word: " << signed_text(signed_word_of_chain(chain)) << '\n';
}

struct Options {
  std::string file = "-";
  bool json_out = false;
  std::string method = "word";
  std::string format = "json";
  bool trace = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::vector<std::size_t> stabilize;
  std::size_t paths = 3;
  bool corrupt = false;
};

int cmd_info(const Options &o, std::istream &in, std::ostream &out) {
  const auto p = load_problem(o.file, in);
  if (o.json_out) out << pretty(info_json(p.chain));
  else info_text(p.chain, out);
  return kExitOk;
}

int cmd_bmatrix(const Options &o, std::istream &in, std::ostream &out) {
  if (o.trace && (o.method != "path" || o.format != "json"))
    throw Error(ErrorKind::Parse, "--trace needs --method path and --format json");
  const auto p = load_problem(o.file, in);
  std::optional<ExchangeMatrix> m;
  std::vector<MoveTraceStep> trace;
  if (o.method == "path") {
    auto r = b_via_mutation_path(p.chain);
    m = std::move(r.matrix);
    trace = std::move(r.trace);
  } else if (o.method == "word") {
    m = b_matrix_signed(signed_word_of_chain(p.chain));
  } else {
    m = b_kk(p.chain);
  }
  if (o.format == "csv") out << to_csv(*m);
  else if (o.format == "dot") out << to_dot(*m);
  else if (o.trace)
    out << pretty(json{{"matrix", to_json(*m)}, {"trace", trace_to_json(trace, *p.cartan)}});
  else out << pretty(to_json(*m));
  return kExitOk;
}

int cmd_signed_word(const Options &o, std::istream &in, std::ostream &out) {
  const auto p = load_problem(o.file, in);
  const auto w = signed_word_of_chain(p.chain);
  json j = to_json(w);
  j["frozen"] = w.frozen();
  j["exchangeable"] = w.exchangeable();
  out << pretty(j);
  return kExitOk;
}

int verify_problem(const Options &o, std::istream &in, std::ostream &out) {
  const auto p = load_problem(o.file, in);
  if (!o.stabilize.empty()) {
    const auto s = o.stabilize[0], t = o.stabilize[1];
    if (s < 1 || s > t || t > p.chain.length())
      throw Error(ErrorKind::OutOfRange, "--stabilize needs 1 <= s <= t <= " +
                                             std::to_string(p.chain.length()));
  }
  Report report;
  try {
    report = verify_chain(p.chain, VerifyOptions{o.corrupt});
    if (o.paths > 0) report.append(verify_path_independence(p.chain, o.paths, o.seed));
    if (!o.stabilize.empty())
      report.append(verify_stabilization(p.chain, o.stabilize[0], o.stabilize[1]));
    else if (p.chain.length() >= 2)
      report.append(verify_stabilization_all(p.chain));
  } catch (const Error &e) {
    report.checks.push_back({"ERROR", false, e.what()});
  }
  json j = to_json(report);
  if (!report.pass()) j["counterexample"] = problem_to_json(p.chain);
  out << pretty(j);
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

int verify_random(const Options &o, std::ostream &out) {
  TrialOptions opts;
  opts.path_trials = o.paths;
  opts.verify.corrupt_word_matrix = o.corrupt;
  const auto outcomes = run_trials_parallel(o.random, o.seed, opts);
  const auto failed = static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto &t) { return !t.pass(); }));
  json j{{"pass", failed == 0}, {"trials", o.random}, {"seed", o.seed}, {"failed", failed}};
  auto first = std::find_if(outcomes.begin(), outcomes.end(), [](const auto &t) { return !t.pass(); });
  if (first != outcomes.end()) {
    json f = to_json(first->report);
    f["index"] = first->index;
    f["counterexample"] = problem_to_json(first->counterexample->chain);
    j["first_failure"] = std::move(f);
  }
  out << pretty(j);
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Chains of i-boxes and their exchange matrices"};
  app.require_subcommand(1);
  Options o;

  auto *info = app.add_subcommand("info", "List boxes, frozen/exchangeable indices, signed word");
  info->add_option("FILE", o.file, "problem JSON, '-' for stdin")->required();
  info->add_flag("--json", o.json_out, "JSON instead of text");

  auto *bm = app.add_subcommand("bmatrix", "Exchange matrix of the chain");
  bm->add_option("FILE", o.file, "problem JSON, '-' for stdin")->required();
  bm->add_option("--method", o.method, "path, word or kk")
      ->check(CLI::IsMember({"path", "word", "kk"}))
      ->capture_default_str();
  bm->add_option("--format", o.format, "json, csv or dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}))
      ->capture_default_str();
  bm->add_flag("--trace", o.trace, "also print the move trace (path method, json)");

  auto *sw = app.add_subcommand("signed-word", "Signed word of the chain");
  sw->add_option("FILE", o.file, "problem JSON, '-' for stdin")->required();

  auto *ver = app.add_subcommand("verify", "Compare the three constructions");
  auto *file_opt = ver->add_option("FILE", o.file, "problem JSON, '-' for stdin");
  auto *random_opt = ver->add_option("--random", o.random, "number of random instances");
  ver->add_option("--seed", o.seed, "seed for random instances and move sequences")
      ->capture_default_str();
  auto *stab_opt = ver->add_option("--stabilize", o.stabilize, "prefix pair s t")
      ->expected(2);
  ver->add_option("--paths", o.paths, "random move sequences per chain")->capture_default_str();
  ver->add_flag("--corrupt", o.corrupt, "negative control: perturb the signed-word matrix");
  random_opt->excludes(file_opt);
  stab_opt->excludes(random_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (info->parsed()) return cmd_info(o, in, out);
    if (bm->parsed()) return cmd_bmatrix(o, in, out);
    if (sw->parsed()) return cmd_signed_word(o, in, out);
    if (random_opt->count() > 0) return verify_random(o, out);
    if (file_opt->count() == 0) throw Error(ErrorKind::Parse, "verify needs FILE or --random N");
    return verify_problem(o, in, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

} // namespace iboxes
