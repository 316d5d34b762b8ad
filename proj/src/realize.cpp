#include "crossmat/realize.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "crossmat/ladder.hpp"

namespace crossmat {

std::string to_string(Role role) {
  switch (role) {
    case Role::OU:
      return "OU";
    case Role::CN:
      return "CN";
    case Role::C:
      return "C";
  }
  return "?";
}

std::string to_string(RealizeFailure reason) {
  switch (reason) {
    case RealizeFailure::NotT0:
      return "NotT0";
    case RealizeFailure::OddEntry:
      return "OddEntry";
    case RealizeFailure::Negative:
      return "Negative";
    case RealizeFailure::Asymmetric:
      return "Asymmetric";
    case RealizeFailure::SizeUnsupported:
      return "SizeUnsupported";
    case RealizeFailure::SearchExhausted:
      return "SearchExhausted";
    case RealizeFailure::NotZeroTwo:
      return "NotZeroTwo";
    case RealizeFailure::NotUpperTriangular:
      return "NotUpperTriangular";
    case RealizeFailure::NonZeroDiagonal:
      return "NonZeroDiagonal";
  }
  return "?";
}

std::string RealizeError::message() const {
  std::string out = to_string(reason);
  if (witness) {
    out += " (" + std::to_string((*witness)[0]) + "," + std::to_string((*witness)[1]) + "," +
           std::to_string((*witness)[2]) + ")";
  }
  if (!detail.empty()) out += ": " + detail;
  return out;
}

const Realization& RealizeResult::value() const {
  if (auto* r = std::get_if<Realization>(&v_)) return *r;
  throw std::logic_error("realization failed: " + std::get<RealizeError>(v_).message());
}

const RealizeError& RealizeResult::error() const {
  if (auto* e = std::get_if<RealizeError>(&v_)) return *e;
  throw std::logic_error("realization succeeded; no error to report");
}

namespace {

RealizeError fail(RealizeFailure reason, std::string detail = {}) {
  return RealizeError{reason, std::nullopt, std::move(detail)};
}

std::string at(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::optional<RealizeError> check_size(const SquareMatrix& m) {
  if (m.size() < 1 || m.size() > kMaxStrands) {
    return fail(RealizeFailure::SizeUnsupported,
                "n = " + std::to_string(m.size()) + " outside [1, " + std::to_string(kMaxStrands) +
                    "]");
  }
  return std::nullopt;
}

std::optional<RealizeError> check_zero_diagonal(const SquareMatrix& m) {
  for (int i = 1; i <= m.size(); ++i)
    if (m(i, i) != 0) return fail(RealizeFailure::NonZeroDiagonal, "entry " + at(i, i));
  return std::nullopt;
}

std::optional<RealizeError> check_non_negative(const SquareMatrix& m) {
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      if (m(i, j) < 0) return fail(RealizeFailure::Negative, "entry " + at(i, j));
  return std::nullopt;
}

std::optional<RealizeError> check_even(const SquareMatrix& m) {
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      if (m(i, j) % 2 != 0) return fail(RealizeFailure::OddEntry, "entry " + at(i, j));
  return std::nullopt;
}

std::optional<RealizeError> check_t0(const SquareMatrix& m) {
  if (auto v = t0_violation(m)) return RealizeError{RealizeFailure::NotT0, v, {}};
  return std::nullopt;
}

std::optional<RealizeError> check_cn02_input(const SquareMatrix& m) {
  if (auto e = check_size(m)) return e;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) {
      if (m(i, j) != 0 && m(i, j) != 2)
        return fail(RealizeFailure::NotZeroTwo, "entry " + at(i, j));
      if (m(i, j) != 0 && i >= j) return fail(RealizeFailure::NotUpperTriangular, "entry " + at(i, j));
    }
  return check_t0(m);
}

// Final gate for every role: the returned word must satisfy its equation.
Realization certify(BraidWord word, SquareMatrix target, Role role, std::string method) {
  bool holds = false;
  switch (role) {
    case Role::CN:
      holds = cn_matrix(word) == target;
      break;
    case Role::OU:
      holds = ou_matrix(word) == target;
      break;
    case Role::C:
      holds = crossing_matrix(word) == target;
      break;
  }
  if (!holds) {
    throw std::logic_error(method + " produced '" + format_word(word) + "' which does not " +
                           to_string(role) + "-realize " + format_matrix_array(target));
  }
  return Realization{std::move(word), std::move(target), role, std::move(method)};
}

// Matrices whose only nonzero entries sit at (i, i+1).
bool adjacent_only(const SquareMatrix& m) {
  for (int i = 1; i <= m.size(); ++i)
    for (int j = i + 2; j <= m.size(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

// Single column l with 2's exactly on rows k..l-1. Returns (l, k).
std::optional<std::pair<int, int>> hook_column_shape(const SquareMatrix& m) {
  int column = 0;
  for (int j = 1; j <= m.size(); ++j)
    for (int i = 1; i < j; ++i)
      if (m(i, j) != 0) {
        if (column != 0 && column != j) return std::nullopt;
        column = j;
      }
  if (column == 0) return std::nullopt;
  int k = column;
  while (k > 1 && m(k - 1, column) != 0) --k;
  for (int i = 1; i < k; ++i)
    if (m(i, column) != 0) return std::nullopt;
  return std::pair{column, k};
}

class Cn02Search {
public:
  Cn02Search(const SquareMatrix& upper, SearchOptions options)
      : n_(upper.size()), options_(options) {
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b) target_[pair_index(a, b)] = static_cast<std::uint8_t>(upper(a, b));
    for (int p = 0; p < n_; ++p) strand_at_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(p + 1);
    length_ = static_cast<int>(upper.upper_sum());
  }

  std::optional<BraidWord> run(SearchStats* stats) {
    word_.clear();
    const bool found = dfs(length_);
    if (stats) {
      stats->nodes = nodes_;
      stats->memo_entries = failed_.size();
      stats->budget_hit = budget_hit_;
    }
    if (!found) return std::nullopt;
    BraidWord w(n_);
    for (int p : word_) w.push_back({p, Sign::Positive});
    return w;
  }

private:
  static constexpr int kMaxPairs = kMaxStrands * (kMaxStrands - 1) / 2;

  std::size_t pair_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    // row-major index of (a,b), a<b, in the strict upper triangle
    return static_cast<std::size_t>((a - 1) * (2 * n_ - a) / 2 + (b - a - 1));
  }

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int p = 0; p < n_; ++p) k = (k << 3) | (strand_at_[static_cast<std::size_t>(p)] - 1u);
    const std::size_t pairs = static_cast<std::size_t>(n_ * (n_ - 1) / 2);
    for (std::size_t q = 0; q < pairs; ++q) k = (k << 2) | count_[q];
    return k;
  }

  bool dfs(int remaining) {
    if (remaining == 0) return true;  // counts never exceed targets, so all are met
    if (options_.node_budget != 0 && nodes_ >= options_.node_budget) {
      budget_hit_ = true;
      return false;
    }
    ++nodes_;
    for (int p = 1; p < n_; ++p) {
      auto& a = strand_at_[static_cast<std::size_t>(p - 1)];
      auto& b = strand_at_[static_cast<std::size_t>(p)];
      const std::size_t q = pair_index(a, b);
      if (count_[q] >= target_[q]) continue;
      // The pair's relative order flips; odd counts are exactly the inverted pairs.
      const int odd_delta = (count_[q] % 2 == 0) ? 1 : -1;
      if (odd_pairs_ + odd_delta > remaining - 1) continue;
      ++count_[q];
      odd_pairs_ += odd_delta;
      std::swap(a, b);
      word_.push_back(p);
      const std::uint64_t k = key();
      if (!failed_.contains(k)) {
        if (dfs(remaining - 1)) return true;
        if (budget_hit_) return false;
        failed_.insert(k);
      }
      word_.pop_back();
      std::swap(a, b);
      odd_pairs_ -= odd_delta;
      --count_[q];
    }
    return false;
  }

  int n_;
  SearchOptions options_;
  int length_ = 0;
  std::array<std::uint8_t, kMaxPairs> target_{};
  std::array<std::uint8_t, kMaxPairs> count_{};
  std::array<std::uint8_t, kMaxStrands> strand_at_{};
  int odd_pairs_ = 0;
  std::vector<int> word_;
  std::unordered_set<std::uint64_t> failed_;
  std::size_t nodes_ = 0;
  bool budget_hit_ = false;
};

SearchOptions effective(const SearchOptions& options, int n) {
  SearchOptions out = options;
  if (out.node_budget == 0 && n >= 6) out.node_budget = kDefaultWideBudget;
  return out;
}

RealizeResult cn02_search_result(const SquareMatrix& m, SearchOptions options) {
  SearchStats stats;
  const SearchOptions eff = effective(options, m.size());
  auto word = search_cn02(m, eff, &stats);
  if (!word) {
    return fail(RealizeFailure::SearchExhausted,
                stats.budget_hit ? "node budget of " + std::to_string(eff.node_budget) + " reached"
                                 : "no word of length " + std::to_string(m.upper_sum()) + " exists");
  }
  return certify(std::move(*word), m + m.transpose(), Role::CN, "search");
}

}  // namespace

std::optional<BraidWord> search_cn02(const SquareMatrix& upper, SearchOptions options,
                                     SearchStats* stats) {
  if (upper.size() < 1 || upper.size() > kMaxStrands) {
    throw std::invalid_argument("search_cn02: n outside [1, 7]");
  }
  for (int i = 1; i <= upper.size(); ++i)
    for (int j = 1; j <= upper.size(); ++j)
      if ((upper(i, j) != 0 && i >= j) || (upper(i, j) != 0 && upper(i, j) != 2)) {
        throw std::invalid_argument("search_cn02: expected a strictly upper triangular (0,2)-matrix");
      }
  Cn02Search search(upper, options);
  return search.run(stats);
}

BraidWord column_word(int n, int k) {
  if (!(1 <= k && k <= n - 1)) throw std::invalid_argument("column_word needs 1 <= k <= n-1");
  return ladder_to_word(hook_column_expand(n, n, k));
}

BraidWord pad(const BraidWord& w, int left, int right) {
  if (left < 0 || right < 0) throw std::invalid_argument("pad: negative strand count");
  BraidWord out(w.strands() + left + right);
  for (const Letter& l : w.letters()) out.push_back({l.index + left, l.sign});
  return out;
}

RealizeResult realize_cn02(const SquareMatrix& m, SearchOptions options) {
  if (auto e = check_cn02_input(m)) return *e;
  const SquareMatrix target = m + m.transpose();
  const int n = m.size();

  if (m.is_zero()) return certify(BraidWord(n), target, Role::CN, "zero");

  if (adjacent_only(m)) {
    BraidWord w(n);
    for (int i = 1; i < n; ++i)
      if (m(i, i + 1) == 2) {
        w.push_back({i, Sign::Positive});
        w.push_back({i, Sign::Positive});
      }
    return certify(std::move(w), target, Role::CN, "adjacent twists");
  }

  if (auto shape = hook_column_shape(m)) {
    const auto [l, k] = *shape;
    return certify(pad(column_word(l, k), 0, n - l), target, Role::CN, "hook column");
  }

  return cn02_search_result(m, options);
}

RealizeResult realize_cn02_by_search(const SquareMatrix& m, SearchOptions options) {
  if (auto e = check_cn02_input(m)) return *e;
  return cn02_search_result(m, options);
}

RealizeResult realize_cn02_by_band_ladder(const SquareMatrix& m) {
  if (auto e = check_cn02_input(m)) return *e;
  auto routed = band_ladder_to_w(m);
  if (!routed) {
    return fail(RealizeFailure::SizeUnsupported, "matrix has a 2 at distance >= 3 from the diagonal");
  }
  return certify(ladder_to_word(routed->first), m + m.transpose(), Role::CN, "band ladder");
}

RealizeResult realize_cn_even(const SquareMatrix& m, SearchOptions options) {
  if (auto e = check_size(m)) return *e;
  if (auto e = check_zero_diagonal(m)) return *e;
  SquareMatrix sym = m;
  if (m.strictly_upper()) {
    sym = m + m.transpose();
  } else if (!m.symmetric()) {
    return fail(RealizeFailure::Asymmetric, "expected a symmetric or strictly upper triangular matrix");
  }
  if (auto e = check_non_negative(sym)) return *e;
  if (auto e = check_even(sym)) return *e;
  if (auto e = check_t0(sym)) return *e;

  const int n = sym.size();
  SquareMatrix skeleton(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) skeleton(i, j) = sym(i, j) > 0 ? 2 : 0;

  auto base = realize_cn02(skeleton, options);
  if (!base) return base;

  // One crossing per heavy pair becomes sym(a,b) - 1 half twists at the same
  // position; an odd run swaps like a single crossing, so later positions stay put.
  const BraidWord& word = base.value().word;
  BraidWord out(n);
  std::vector<bool> expanded(static_cast<std::size_t>(n * n), false);
  for_each_crossing(word, [&](const Crossing& c) {
    const int a = std::min(c.left_strand, c.right_strand);
    const int b = std::max(c.left_strand, c.right_strand);
    const auto slot = static_cast<std::size_t>((a - 1) * n + (b - 1));
    int copies = 1;
    if (sym(a, b) >= 4 && !expanded[slot]) {
      copies = sym(a, b) - 1;
      expanded[slot] = true;
    }
    for (int r = 0; r < copies; ++r) out.push_back({c.position, Sign::Positive});
  });
  return certify(std::move(out), sym, Role::CN, base.value().method + " + half-twist runs");
}

RealizeResult realize_ou(const SquareMatrix& m, SearchOptions options) {
  if (auto e = check_size(m)) return *e;
  if (auto e = check_zero_diagonal(m)) return *e;
  if (auto e = check_non_negative(m)) return *e;
  const SquareMatrix sym = m + m.transpose();
  if (auto e = check_even(sym)) return *e;
  if (auto e = check_t0(sym)) return *e;

  auto cn = realize_cn_even(sym, options);
  if (!cn) return cn;

  // The first m(a,b) crossings of the pair a<b put a over b; the rest put b over a.
  const int n = m.size();
  SquareMatrix given(n);
  BraidWord out(n);
  for_each_crossing(cn.value().word, [&](const Crossing& c) {
    const int a = std::min(c.left_strand, c.right_strand);
    const int b = std::max(c.left_strand, c.right_strand);
    const int over = given(a, b) < m(a, b) ? a : b;
    ++given(a, b);
    out.push_back({c.position, over == c.left_strand ? Sign::Positive : Sign::Negative});
  });
  return certify(std::move(out), m, Role::OU, cn.value().method + " + over/under assignment");
}

RealizeResult realize_crossing_positive_pure(const SquareMatrix& m, SearchOptions options) {
  if (auto e = check_size(m)) return *e;
  if (auto e = check_zero_diagonal(m)) return *e;
  if (!m.symmetric()) return fail(RealizeFailure::Asymmetric);
  if (auto e = check_non_negative(m)) return *e;
  if (auto e = check_t0(m)) return *e;

  auto ou = realize_ou(m, options);
  if (!ou) return ou;
  return certify(make_positive(ou.value().word), m, Role::C, ou.value().method + " + all positive");
}

StandardForm standard_form(const BraidWord& w) {
  StandardForm f{BraidWord(w.strands()), permutation_braid(braid_permutation(w)), SquareMatrix(),
                 SquareMatrix()};
  f.pure = concat(w, inverse(f.simple));
  f.pure_ou = ou_matrix(f.pure);
  f.simple_ou = ou_matrix(f.simple);
  return f;
}

}  // namespace crossmat
