#include "crossmat/ladder.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>
#include <unordered_set>
#include <variant>

namespace crossmat {

namespace {

void check_edge(const LadderEdge& e, int n) {
  if (e.is_white()) {
    if (e.i < 1 || e.i > n - 1 || e.j != e.i + 1) {
      throw std::invalid_argument("white rung W" + std::to_string(e.i) + " outside " +
                                  std::to_string(n) + " segments");
    }
  } else if (e.i < 1 || e.j > n || e.i >= e.j) {
    throw std::invalid_argument("black rung B" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                " invalid on " + std::to_string(n) + " segments");
  }
}

using Edges = std::vector<LadderEdge>;
using Outcome = std::variant<Edges, MoveError::Reason>;

Outcome mismatch() { return MoveError::Reason::PatternMismatch; }
Outcome side() { return MoveError::Reason::SideCondition; }

bool W(const LadderEdge& e) { return e.is_white(); }
bool B(const LadderEdge& e) { return e.is_black(); }
LadderEdge white(int i) { return LadderEdge::white(i); }
LadderEdge black(int i, int j) { return LadderEdge::black(i, j); }

// The matched side of each move, already sliced out of the diagram.
Outcome rewrite(Move move, const LadderEdge* e) {
  const bool fwd = move.direction == Direction::Forward;
  switch (move.kind) {
    case MoveKind::L1:
      if (fwd) {
        if (!B(e[0]) || e[0].j != e[0].i + 1) return mismatch();
        return Edges{white(e[0].i), white(e[0].i)};
      }
      if (!W(e[0]) || !W(e[1]) || e[0].i != e[1].i) return mismatch();
      return Edges{black(e[0].i, e[0].i + 1)};
    case MoveKind::L2:
      if (!B(e[0]) || !B(e[1])) return mismatch();
      return Edges{e[1], e[0]};
    case MoveKind::L3: {
      if (!W(e[0]) || !W(e[1])) return mismatch();
      const int k = e[0].i, l = e[1].i;
      if (!(k + 1 < l || l + 1 < k)) return side();
      return Edges{e[1], e[0]};
    }
    case MoveKind::L4: {
      if (!W(e[0]) || !W(e[1]) || !W(e[2])) return mismatch();
      const int a = e[0].i, b = e[1].i;
      if (e[2].i != a) return mismatch();
      if (fwd ? b != a + 1 : b != a - 1) return mismatch();
      return Edges{white(b), white(a), white(b)};
    }
    case MoveKind::L5: {
      const LadderEdge& bl = fwd ? e[0] : e[1];
      const LadderEdge& wh = fwd ? e[1] : e[0];
      if (!B(bl) || !W(wh)) return mismatch();
      const int i = bl.i, j = bl.j, k = wh.i;
      if (!(j < k || k + 1 < i || (i < k && k + 1 < j))) return side();
      return Edges{e[1], e[0]};
    }
    case MoveKind::L6:
      if (fwd) {  // B(i,j) W(i) -> W(i) B(i+1,j)
        if (!B(e[0]) || !W(e[1]) || e[1].i != e[0].i) return mismatch();
        if (!(e[0].i + 1 < e[0].j)) return side();
        return Edges{white(e[0].i), black(e[0].i + 1, e[0].j)};
      } else {  // W(i) B(i+1,j) -> B(i,j) W(i)
        if (!W(e[0]) || !B(e[1]) || e[1].i != e[0].i + 1) return mismatch();
        return Edges{black(e[0].i, e[1].j), white(e[0].i)};
      }
    case MoveKind::L7:
      if (fwd) {  // W(i) B(i,j) -> B(i+1,j) W(i)
        if (!W(e[0]) || !B(e[1]) || e[1].i != e[0].i) return mismatch();
        if (!(e[1].i + 1 < e[1].j)) return side();
        return Edges{black(e[1].i + 1, e[1].j), white(e[0].i)};
      } else {  // B(i+1,j) W(i) -> W(i) B(i,j)
        if (!B(e[0]) || !W(e[1]) || e[0].i != e[1].i + 1) return mismatch();
        return Edges{white(e[1].i), black(e[1].i, e[0].j)};
      }
    case MoveKind::L8:
      if (fwd) {  // B(i,j) W(j-1) -> W(j-1) B(i,j-1)
        if (!B(e[0]) || !W(e[1]) || e[1].i != e[0].j - 1) return mismatch();
        if (!(e[0].i < e[0].j - 1)) return side();
        return Edges{white(e[1].i), black(e[0].i, e[0].j - 1)};
      } else {  // W(j-1) B(i,j-1) -> B(i,j) W(j-1)
        if (!W(e[0]) || !B(e[1]) || e[1].j != e[0].i) return mismatch();
        return Edges{black(e[1].i, e[0].i + 1), white(e[0].i)};
      }
    case MoveKind::L9:
      if (fwd) {  // W(j-1) B(i,j) -> B(i,j-1) W(j-1)
        if (!W(e[0]) || !B(e[1]) || e[0].i != e[1].j - 1) return mismatch();
        if (!(e[1].i < e[1].j - 1)) return side();
        return Edges{black(e[1].i, e[1].j - 1), white(e[0].i)};
      } else {  // B(i,j-1) W(j-1) -> W(j-1) B(i,j)
        if (!B(e[0]) || !W(e[1]) || e[1].i != e[0].j) return mismatch();
        return Edges{white(e[1].i), black(e[0].i, e[0].j + 1)};
      }
  }
  return mismatch();
}

std::optional<Edges> try_move(const Edges& edges, Move move, std::size_t at,
                              MoveError::Reason* reason = nullptr) {
  const std::size_t span = move_span(move);
  if (at + span > edges.size()) {
    if (reason) *reason = MoveError::Reason::PatternMismatch;
    return std::nullopt;
  }
  Outcome out = rewrite(move, edges.data() + at);
  if (auto* r = std::get_if<MoveError::Reason>(&out)) {
    if (reason) *reason = *r;
    return std::nullopt;
  }
  const Edges& replacement = std::get<Edges>(out);
  Edges result;
  result.reserve(edges.size() - span + replacement.size());
  result.insert(result.end(), edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(at));
  result.insert(result.end(), replacement.begin(), replacement.end());
  result.insert(result.end(), edges.begin() + static_cast<std::ptrdiff_t>(at + span), edges.end());
  return result;
}

constexpr std::array<MoveKind, 9> kAllMoves{MoveKind::L1, MoveKind::L2, MoveKind::L3,
                                            MoveKind::L4, MoveKind::L5, MoveKind::L6,
                                            MoveKind::L7, MoveKind::L8, MoveKind::L9};

}  // namespace

LadderDiagram::LadderDiagram(int n, std::vector<LadderEdge> edges) : LadderDiagram(n) {
  for (const auto& e : edges) push_back(e);
}

void LadderDiagram::push_back(LadderEdge e) {
  check_edge(e, n_);
  edges_.push_back(e);
}

LadderDiagram b_ladder(const SquareMatrix& m, EdgeOrder order) {
  const int n = m.size();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int v = m(i, j);
      if (v != 0 && v != 2) {
        throw std::invalid_argument("b_ladder: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") = " + std::to_string(v) +
                                    " is not 0 or 2");
      }
      if (v == 2 && i >= j) {
        throw std::invalid_argument("b_ladder: nonzero entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") on or below the diagonal");
      }
      if (v == 2) pairs.emplace_back(i, j);
    }
  }
  switch (order) {
    case EdgeOrder::RowMajor:
      break;
    case EdgeOrder::ColumnDescending:
      std::sort(pairs.begin(), pairs.end(), [](auto a, auto b) {
        return std::tuple(a.second, -a.first) < std::tuple(b.second, -b.first);
      });
      break;
    case EdgeOrder::Band:
      std::sort(pairs.begin(), pairs.end(), [](auto a, auto b) {
        return std::tuple(a.first + a.second, a.first) < std::tuple(b.first + b.second, b.first);
      });
      break;
  }
  LadderDiagram l(std::max(n, 1));
  for (auto [i, j] : pairs) l.push_back(LadderEdge::black(i, j));
  return l;
}

LadderEval eval_ladder(const LadderDiagram& l) {
  const int n = l.segments();
  std::vector<int> strand_at(static_cast<std::size_t>(n));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  SquareMatrix contribution(n);
  for (const auto& e : l.edges()) {
    auto& a = strand_at[static_cast<std::size_t>(e.i - 1)];
    auto& b = strand_at[static_cast<std::size_t>(e.j - 1)];
    const int weight = e.is_black() ? 2 : 1;
    contribution(a, b) += weight;
    contribution(b, a) += weight;
    if (e.is_white()) std::swap(a, b);
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) images[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p - 1)] - 1)] = p;
  return {std::move(contribution), Permutation::from_images(std::move(images))};
}

std::size_t move_span(Move move) {
  switch (move.kind) {
    case MoveKind::L1:
      return move.direction == Direction::Forward ? 1 : 2;
    case MoveKind::L4:
      return 3;
    default:
      return 2;
  }
}

LadderDiagram apply_move(const LadderDiagram& l, Move move, std::size_t at) {
  MoveError::Reason reason{};
  auto edges = try_move(l.edges(), move, at, &reason);
  if (!edges) {
    std::string where = format_move(move) + " at " + std::to_string(at);
    if (reason == MoveError::Reason::SideCondition) {
      throw MoveError(reason, where + ": side condition violated");
    }
    throw MoveError(reason, where + ": edges do not match the move pattern");
  }
  return LadderDiagram(l.segments(), std::move(*edges));
}

bool is_w_ladder(const LadderDiagram& l) {
  return std::all_of(l.edges().begin(), l.edges().end(),
                     [](const LadderEdge& e) { return e.is_white(); });
}

LadderDiagram hook_column_expand(int n, int l, int k) {
  if (!(1 <= k && k < l && l <= n)) {
    throw std::invalid_argument("hook column needs 1 <= k < l <= n");
  }
  LadderDiagram out(n);
  for (int i = l - 1; i >= k; --i) out.push_back(LadderEdge::white(i));
  for (int i = k; i <= l - 1; ++i) out.push_back(LadderEdge::white(i));
  return out;
}

LadderDiagram hook_column(int n, int l, int k) {
  if (!(1 <= k && k < l && l <= n)) {
    throw std::invalid_argument("hook column needs 1 <= k < l <= n");
  }
  LadderDiagram out(n);
  for (int i = l - 1; i >= k; --i) out.push_back(LadderEdge::black(i, l));
  return out;
}

MoveScript hook_column_script(int l, int k) {
  if (!(1 <= k && k < l)) throw std::invalid_argument("hook column needs 1 <= k < l");
  MoveScript script;
  const std::size_t stages = static_cast<std::size_t>(l - k);
  // Stage s: leading whites occupy [0, s), the remaining hooks start at s.
  for (std::size_t s = 0; s < stages; ++s) {
    script.push_back({{MoveKind::L1, Direction::Forward}, s});
    const std::size_t hooks_left = stages - s - 1;
    for (std::size_t h = 0; h < hooks_left; ++h) {
      script.push_back({{MoveKind::L9, Direction::Forward}, s + 1 + h});
    }
  }
  return script;
}

LadderDiagram replay(LadderDiagram l, const MoveScript& script) {
  for (const auto& [move, at] : script) l = apply_move(l, move, at);
  return l;
}

std::optional<std::pair<LadderDiagram, MoveScript>> band_ladder_to_w(const SquareMatrix& m) {
  const int n = m.size();
  if (!m.strictly_upper() || !is_t0(m)) return std::nullopt;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (m(i, j) != 0 && m(i, j) != 2) return std::nullopt;
      if (j - i >= 3 && m(i, j) != 0) return std::nullopt;
    }

  LadderDiagram l = b_ladder(m, EdgeOrder::Band);
  MoveScript script;
  auto apply = [&](Move mv, std::size_t at) {
    l = apply_move(l, mv, at);
    script.push_back({mv, at});
  };

  for (std::size_t p = 0; p < l.size(); ++p) {
    const auto e = l.edges()[p];
    if (e.is_black() && e.j == e.i + 1) apply({MoveKind::L1, Direction::Forward}, p);
  }
  for (std::size_t p = 0; p < l.size(); ++p) {
    const auto e = l.edges()[p];
    if (!e.is_black()) continue;
    const auto& edges = l.edges();
    if (p > 0 && edges[p - 1] == LadderEdge::white(e.i)) {
      apply({MoveKind::L7, Direction::Forward}, p - 1);  // -> B(i+1,i+2) W(i) at p-1
      apply({MoveKind::L1, Direction::Forward}, p - 1);
    } else if (p + 1 < edges.size() && edges[p + 1] == LadderEdge::white(e.j - 1)) {
      apply({MoveKind::L8, Direction::Forward}, p);  // -> W(i+1) B(i,i+1) at p
      apply({MoveKind::L1, Direction::Forward}, p + 1);
    } else {
      return std::nullopt;
    }
  }
  return std::pair{std::move(l), std::move(script)};
}

std::optional<LadderDiagram> rewrite_to_w(const LadderDiagram& start, std::size_t budget,
                                          RewriteStats* stats) {
  RewriteStats local;
  RewriteStats& st = stats ? *stats : local;
  st = {};
  if (is_w_ladder(start)) {
    st.exhausted = false;
    return start;
  }

  auto key = [](const Edges& edges) {
    std::string k;
    k.reserve(edges.size() * 3);
    for (const auto& e : edges) {
      k.push_back(e.is_black() ? 'B' : 'W');
      k.push_back(static_cast<char>(e.i));
      k.push_back(static_cast<char>(e.j));
    }
    return k;
  };
  // Zero exactly on W-ladders; L1 on an adjacent hook and L6-L9 on a long
  // one each lower it.
  auto cost = [](const Edges& edges) {
    long c = 0;
    for (const auto& e : edges)
      if (e.is_black()) c += e.j - e.i;
    return c;
  };

  using Entry = std::tuple<long, std::size_t, std::size_t>;  // cost, length, serial
  std::vector<Edges> states;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_set<std::string> seen;

  states.push_back(start.edges());
  seen.insert(key(start.edges()));
  frontier.emplace(cost(start.edges()), start.size(), 0);

  while (!frontier.empty()) {
    if (st.expanded >= budget) return std::nullopt;
    const auto [c, len, id] = frontier.top();
    frontier.pop();
    ++st.expanded;
    const Edges current = states[id];
    for (std::size_t at = 0; at < current.size(); ++at) {
      for (MoveKind kind : kAllMoves) {
        for (Direction dir : {Direction::Forward, Direction::Backward}) {
          auto next = try_move(current, {kind, dir}, at);
          if (!next) continue;
          if (!seen.insert(key(*next)).second) continue;
          const long next_cost = cost(*next);
          if (next_cost == 0) return LadderDiagram(start.segments(), std::move(*next));
          states.push_back(std::move(*next));
          frontier.emplace(next_cost, states.back().size(), states.size() - 1);
        }
      }
    }
  }
  st.exhausted = true;
  return std::nullopt;
}

BraidWord ladder_to_word(const LadderDiagram& l) {
  BraidWord w(l.segments());
  for (const auto& e : l.edges()) {
    if (e.is_black()) {
      throw std::invalid_argument("ladder_to_word: black rung B" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + " has no braid word");
    }
    w.push_back({e.i, Sign::Positive});
  }
  return w;
}

LadderDiagram parse_ladder(std::string_view text, int n) {
  LadderDiagram l(n);
  std::istringstream in{std::string(text)};
  std::string token;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw std::invalid_argument("bad ladder token '" + token + "'");
    return v;
  };
  while (in >> token) {
    const char head = token[0];
    const std::string body = token.substr(1);
    if (head == 'W' || head == 'w') {
      l.push_back(LadderEdge::white(number(body)));
    } else if (head == 'B' || head == 'b') {
      const auto comma = body.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("bad ladder token '" + token + "'");
      l.push_back(LadderEdge::black(number(body.substr(0, comma)), number(body.substr(comma + 1))));
    } else {
      throw std::invalid_argument("bad ladder token '" + token + "'");
    }
  }
  return l;
}

std::string format_ladder(const LadderDiagram& l) {
  std::string out;
  for (const auto& e : l.edges()) {
    if (!out.empty()) out += ' ';
    if (e.is_white()) {
      out += "W" + std::to_string(e.i);
    } else {
      out += "B" + std::to_string(e.i) + "," + std::to_string(e.j);
    }
  }
  return out;
}

std::string format_move(Move move) {
  return "L" + std::to_string(static_cast<int>(move.kind)) +
         (move.direction == Direction::Forward ? "+" : "-");
}

Move parse_move(std::string_view text) {
  std::string s(text);
  Move m;
  if (!s.empty() && (s.back() == '+' || s.back() == '-')) {
    m.direction = s.back() == '+' ? Direction::Forward : Direction::Backward;
    s.pop_back();
  }
  if (s.size() != 2 || (s[0] != 'L' && s[0] != 'l') || s[1] < '1' || s[1] > '9') {
    throw std::invalid_argument("unknown move '" + std::string(text) + "' (expected L1..L9)");
  }
  m.kind = static_cast<MoveKind>(s[1] - '0');
  return m;
}

std::string render_ladder(const LadderDiagram& l) {
  const int n = l.segments();
  const std::size_t width = static_cast<std::size_t>(4 * (n - 1) + 1);
  auto column = [](int p) { return static_cast<std::size_t>(4 * (p - 1)); };
  std::string out;
  std::string header(width, ' ');
  for (int p = 1; p <= n; ++p) {
    const std::string label = std::to_string(p);
    header.replace(column(p), label.size(), label);
  }
  out += header;
  out += '\n';
  std::string blank(width, ' ');
  for (int p = 1; p <= n; ++p) blank[column(p)] = '|';
  out += blank + '\n';
  for (const auto& e : l.edges()) {
    std::string row = blank;
    const char end = e.is_black() ? '*' : 'o';
    const char fill = e.is_black() ? '=' : '-';
    for (std::size_t c = column(e.i) + 1; c < column(e.j); ++c) row[c] = row[c] == '|' ? '+' : fill;
    row[column(e.i)] = end;
    row[column(e.j)] = end;
    std::string label = e.is_black() ? "B" + std::to_string(e.i) + "," + std::to_string(e.j)
                                     : "W" + std::to_string(e.i);
    out += row + "   " + label + '\n';
    out += blank + '\n';
  }
  return out;
}

}  // namespace crossmat
