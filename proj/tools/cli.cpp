#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "crossmat/braid.hpp"
#include "crossmat/ladder.hpp"
#include "crossmat/matrix.hpp"
#include "crossmat/oracle.hpp"
#include "crossmat/realize.hpp"

namespace crossmat::cli {

namespace {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Format { Grid, Array };

// Word text with an optional leading "n=<k>" token.
BraidWord read_word(const std::string& text, int n_flag) {
  std::istringstream in(text);
  std::string first;
  std::optional<int> n;
  if (n_flag > 0) n = n_flag;
  std::string rest = text;
  if (in >> first && first.rfind("n=", 0) == 0) {
    try {
      const int header = std::stoi(first.substr(2));
      if (!n) n = header;
    } catch (const std::exception&) {
      throw InputError("bad strand header '" + first + "'");
    }
    std::getline(in, rest);
  }
  return parse_word(rest, n);
}

// Inline "[[...]]" or a path to a matrix file.
SquareMatrix read_matrix(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '[') return parse_matrix(arg);
  std::ifstream file(arg);
  if (!file) throw InputError("cannot open matrix file '" + arg + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_matrix(buffer.str());
}

void print_matrix(std::ostream& out, const std::string& label, const SquareMatrix& m, Format f) {
  if (f == Format::Array) {
    out << label << " = " << format_matrix_array(m) << '\n';
  } else {
    out << label << ":\n" << format_matrix_grid(m);
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string triple(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

int cmd_mat(const std::string& word_text, int n, const std::string& order, Format f,
            std::ostream& out) {
  const BraidWord w = read_word(word_text, n);
  std::optional<SquareMatrix> ordered;
  std::string ordered_label;
  if (!order.empty()) {
    const Permutation p = parse_permutation(order);
    ordered = ou_matrix(w, p);
    ordered_label = "U[" + format_permutation(p) + "]";
  }
  out << "word: " << format_word(w) << '\n';
  out << "strands: " << w.strands() << '\n';
  print_matrix(out, "U", ou_matrix(w), f);
  print_matrix(out, "N", cn_matrix(w), f);
  print_matrix(out, "C", crossing_matrix(w), f);
  if (ordered) print_matrix(out, ordered_label, *ordered, f);
  out << "permutation: " << format_permutation(braid_permutation(w)) << '\n';
  out << "pure: " << yes_no(is_pure(w)) << '\n';
  out << "positive: " << yes_no(is_positive(w)) << '\n';
  return kOk;
}

int cmd_check(const std::string& predicate, const std::string& matrix_arg, std::ostream& out) {
  const SquareMatrix m = read_matrix(matrix_arg);
  std::optional<Triple> witness;
  std::string reason;
  bool verdict = false;
  if (predicate == "t0") {
    witness = t0_violation(m);
    verdict = !witness;
  } else if (predicate == "t1") {
    witness = t1_violation(m);
    verdict = !witness;
  } else if (predicate == "simple" || predicate == "double-simple") {
    const bool simple = predicate == "simple";
    verdict = simple ? is_simple(m) : is_double_simple(m);
    if (!verdict) {
      if (simple && !m.strictly_upper()) {
        reason = "not strictly upper triangular";
      } else if (!simple && !(m.symmetric() && m.zero_diagonal())) {
        reason = "not symmetric with zero diagonal";
      } else if (auto t = t0_violation(m)) {
        witness = t;
        reason = "T0 fails";
      } else if (auto t1 = t1_violation(m)) {
        witness = t1;
        reason = "T1 fails";
      } else {
        reason = "entry outside {0,1}";
      }
    }
  } else {
    throw InputError("unknown predicate '" + predicate + "' (t0, t1, simple, double-simple)");
  }
  out << predicate << ": " << yes_no(verdict);
  if (!verdict) {
    if (witness) out << ", witness " << triple(*witness);
    if (!reason.empty()) out << " (" << reason << ")";
  }
  out << '\n';
  return verdict ? kOk : kNegative;
}

void print_realization(std::ostream& out, const Realization& r, Format f) {
  const BraidWord& w = r.word;
  out << "role: " << to_string(r.role) << '\n';
  out << "method: " << r.method << '\n';
  out << "strands: " << w.strands() << '\n';
  out << "length: " << w.length() << '\n';
  out << "word: " << format_word(w) << '\n';
  print_matrix(out, "target", r.target, f);
  SquareMatrix recomputed;
  switch (r.role) {
    case Role::CN:
      recomputed = cn_matrix(w);
      break;
    case Role::OU:
      recomputed = ou_matrix(w);
      break;
    case Role::C:
      recomputed = crossing_matrix(w);
      break;
  }
  print_matrix(out, "recomputed", recomputed, f);
  out << "match: " << yes_no(recomputed == r.target) << '\n';
  out << "pure: " << yes_no(is_pure(w)) << '\n';
  out << "positive: " << yes_no(is_positive(w)) << '\n';
}

int cmd_realize(const std::string& role, const std::string& matrix_arg, std::size_t budget,
                Format f, std::ostream& out, std::ostream& err) {
  const SquareMatrix m = read_matrix(matrix_arg);
  const SearchOptions options{budget};
  RealizeResult result = [&]() -> RealizeResult {
    if (role == "cn02") return realize_cn02(m, options);
    if (role == "cn") return realize_cn_even(m, options);
    if (role == "ou") return realize_ou(m, options);
    if (role == "cpos") return realize_crossing_positive_pure(m, options);
    throw InputError("unknown role '" + role + "' (cn02, cn, ou, cpos)");
  }();
  if (!result) {
    const RealizeError& e = result.error();
    err << "error: " << e.message() << '\n';
    const bool impossible =
        e.reason == RealizeFailure::NotT0 || e.reason == RealizeFailure::SearchExhausted;
    return impossible ? kNegative : kInputError;
  }
  print_realization(out, result.value(), f);
  return kOk;
}

int cmd_verify(const std::string& claim, int n, std::size_t trials, std::uint64_t seed,
               bool serial, bool json, std::ostream& out) {
  if (claim == "list") {
    for (const auto& id : claim_ids()) out << id << '\n';
    return kOk;
  }
  ClaimParams params;
  params.max_n = n;
  params.trials = trials;
  params.seed = seed;
  params.exec = serial ? Execution::Serial : Execution::Parallel;
  VerificationReport report;
  try {
    report = verify_claim(claim, params);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << (json ? report_json(report) + "\n" : format_report(report));
  return report.pass() ? kOk : kNegative;
}

int infer_segments(const std::string& text) {
  int n = 2;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::string digits = token.substr(1);
    std::replace(digits.begin(), digits.end(), ',', ' ');
    std::istringstream nums(digits);
    int v = 0;
    std::vector<int> values;
    while (nums >> v) values.push_back(v);
    if (values.empty()) continue;
    if (token[0] == 'W' || token[0] == 'w') {
      n = std::max(n, values.front() + 1);
    } else {
      n = std::max(n, values.back());
    }
  }
  return n;
}

int cmd_ladder(const std::string& action, const std::string& text, int n, const std::string& move,
               std::size_t at, std::size_t budget, const std::string& order, Format f,
               std::ostream& out, std::ostream& err) {
  if (action == "from-matrix") {
    const SquareMatrix m = read_matrix(text);
    EdgeOrder o = EdgeOrder::RowMajor;
    if (order == "column") {
      o = EdgeOrder::ColumnDescending;
    } else if (order == "band") {
      o = EdgeOrder::Band;
    } else if (order != "row") {
      throw InputError("unknown edge order '" + order + "' (row, column, band)");
    }
    out << format_ladder(b_ladder(m, o)) << '\n';
    return kOk;
  }

  const LadderDiagram l = parse_ladder(text, n > 0 ? n : infer_segments(text));
  if (action == "render") {
    out << render_ladder(l);
    return kOk;
  }
  if (action == "eval") {
    const LadderEval e = eval_ladder(l);
    print_matrix(out, "contribution", e.contribution, f);
    out << "permutation: " << format_permutation(e.perm) << '\n';
    return kOk;
  }
  if (action == "move") {
    if (move.empty()) throw InputError("ladder move needs --move");
    try {
      out << format_ladder(apply_move(l, parse_move(move), at)) << '\n';
    } catch (const MoveError& e) {
      err << "error: " << e.what() << '\n';
      return kNegative;
    }
    return kOk;
  }
  if (action == "rewrite") {
    RewriteStats stats;
    auto w = rewrite_to_w(l, budget, &stats);
    if (!w) {
      err << "error: no W-ladder found ("
          << (stats.exhausted ? "all reachable ladders explored" : "budget exhausted") << ", "
          << stats.expanded << " states)\n";
      return kNegative;
    }
    out << format_ladder(*w) << '\n';
    return kOk;
  }
  if (action == "to-word") {
    if (!is_w_ladder(l)) {
      err << "error: ladder has black rungs; rewrite it first\n";
      return kNegative;
    }
    out << format_word(ladder_to_word(l)) << '\n';
    return kOk;
  }
  throw InputError("unknown ladder action '" + action +
                   "' (render, eval, move, rewrite, to-word, from-matrix)");
}

int cmd_standard_form(const std::string& word_text, int n, Format f, std::ostream& out) {
  const BraidWord w = read_word(word_text, n);
  const StandardForm sf = standard_form(w);
  out << "word: " << format_word(w) << '\n';
  out << "pure: " << format_word(sf.pure) << '\n';
  out << "simple: " << format_word(sf.simple) << '\n';
  print_matrix(out, "M1", sf.pure_ou, f);
  print_matrix(out, "L1", sf.simple_ou, f);
  print_matrix(out, "U(pure simple)", ou_matrix(concat(sf.pure, sf.simple)), f);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"OU, CN and crossing matrices of braid diagrams", "crossmat"};
  app.require_subcommand(1);

  std::string format = "grid";
  int n = 0;

  std::string word;
  std::string order;
  auto* mat = app.add_subcommand("mat", "print U, N and C of a braid word");
  mat->add_option("word", word, "braid word, e.g. \"1 -2 1\" (optional leading n=<k>)")->required();
  mat->add_option("-n,--strands", n, "strand count");
  mat->add_option("--order", order, "also print U for this strand order, e.g. 3,1,2");
  mat->add_option("--format", format, "grid or array");

  std::string predicate, matrix_arg;
  auto* check = app.add_subcommand("check", "decide t0, t1, simple or double-simple");
  check->add_option("predicate", predicate)->required();
  check->add_option("matrix", matrix_arg, "inline [[..]] or a file path")->required();

  std::string role;
  std::size_t budget = 0;
  auto* realize = app.add_subcommand("realize", "realize a matrix by a braid word");
  realize->add_option("role", role, "cn02, cn, ou or cpos")->required();
  realize->add_option("matrix", matrix_arg, "inline [[..]] or a file path")->required();
  realize->add_option("--budget", budget, "search node budget (0: default)");
  realize->add_option("--format", format, "grid or array");

  std::string claim;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  bool serial = false, json = false;
  auto* verify = app.add_subcommand("verify", "run a verification campaign (`verify list` for ids)");
  verify->add_option("claim", claim)->required();
  verify->add_option("--n", n, "largest strand count (0: claim default)");
  verify->add_option("--trials", trials, "trial count (0: claim default)");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_flag("--serial", serial, "run the serial reference kernel");
  verify->add_flag("--json", json, "machine-readable summary");

  std::string action, ladder_text, move;
  std::size_t at = 0, ladder_budget = 200000;
  std::string edge_order = "row";
  auto* ladder = app.add_subcommand("ladder", "BW-ladder tools");
  ladder->add_option("action", action, "render, eval, move, rewrite, to-word, from-matrix")->required();
  ladder->add_option("ladder", ladder_text, "e.g. \"B1,3 W2\" (a matrix for from-matrix)")->required();
  ladder->add_option("-n,--segments", n, "segment count (default: inferred)");
  ladder->add_option("--move", move, "L1..L9, optional +/- for direction");
  ladder->add_option("--at", at, "0-based rung offset for --move");
  ladder->add_option("--budget", ladder_budget, "states to expand for rewrite");
  ladder->add_option("--order", edge_order, "from-matrix edge order: row, column, band");
  ladder->add_option("--format", format, "grid or array");

  auto* sf = app.add_subcommand("standard-form", "split a word into pure and simple parts");
  sf->add_option("word", word)->required();
  sf->add_option("-n,--strands", n, "strand count");
  sf->add_option("--format", format, "grid or array");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (format != "grid" && format != "array") throw InputError("unknown format '" + format + "'");
    const Format f = format == "array" ? Format::Array : Format::Grid;
    if (mat->parsed()) return cmd_mat(word, n, order, f, out);
    if (check->parsed()) return cmd_check(predicate, matrix_arg, out);
    if (realize->parsed()) return cmd_realize(role, matrix_arg, budget, f, out, err);
    if (verify->parsed()) return cmd_verify(claim, n, trials, seed, serial, json, out);
    if (ladder->parsed()) {
      return cmd_ladder(action, ladder_text, n, move, at, ladder_budget, edge_order, f, out, err);
    }
    if (sf->parsed()) return cmd_standard_form(word, n, f, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace crossmat::cli
