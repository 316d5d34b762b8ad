#pragma once

// Constructive realization of matrices by braid words: CN matrices of pure
// diagrams, OU matrices of pure diagrams, crossing matrices of positive pure
// braids, and the pure-times-simple standard form of an arbitrary diagram.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "crossmat/braid.hpp"
#include "crossmat/matrix.hpp"

namespace crossmat {

enum class Role { OU, CN, C };

std::string to_string(Role role);

struct Realization {
  BraidWord word;
  SquareMatrix target;  // the matrix the word's role-matrix equals
  Role role = Role::CN;
  std::string method;   // which construction produced the word
};

enum class RealizeFailure {
  NotT0,
  OddEntry,
  Negative,
  Asymmetric,
  SizeUnsupported,
  SearchExhausted,
  NotZeroTwo,         // entry outside {0,2}
  NotUpperTriangular, // nonzero entry on or below the diagonal
  NonZeroDiagonal,
};

std::string to_string(RealizeFailure reason);

struct RealizeError {
  RealizeFailure reason;
  std::optional<Triple> witness;  // set for NotT0
  std::string detail;

  std::string message() const;
};

class RealizeResult {
public:
  RealizeResult(Realization r) : v_(std::move(r)) {}
  RealizeResult(RealizeError e) : v_(std::move(e)) {}

  bool ok() const noexcept { return std::holds_alternative<Realization>(v_); }
  explicit operator bool() const noexcept { return ok(); }

  /// Throws std::logic_error when holding an error.
  const Realization& value() const;
  /// Throws std::logic_error when holding a realization.
  const RealizeError& error() const;

private:
  std::variant<Realization, RealizeError> v_;
};

struct SearchOptions {
  /// Maximum DFS nodes; 0 means unbounded.
  std::size_t node_budget = 0;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t memo_entries = 0;
  bool budget_hit = false;
};

/// Largest strand count any realization entry point accepts.
inline constexpr int kMaxStrands = 7;
/// Node budget used for n >= 6 when none is given.
inline constexpr std::size_t kDefaultWideBudget = 20'000'000;

/// Exact-length DFS for a positive word whose CN matrix is `upper` + transpose
/// and whose permutation is the identity. `upper` must be a strictly upper
/// triangular (0,2)-matrix. Letters are tried in ascending index and the
/// first solution is returned; failed states are memoized.
std::optional<BraidWord> search_cn02(const SquareMatrix& upper, SearchOptions options = {},
                                     SearchStats* stats = nullptr);

/// n strands; 2's in the last column at rows k..n-1. Length 2(n-k).
BraidWord column_word(int n, int k);

/// Adds `left` straight strands on the left and `right` on the right.
BraidWord pad(const BraidWord& w, int left, int right);

/// CN-realizes a strictly upper triangular T0 (0,2)-matrix by a pure word of
/// length equal to the entry sum.
RealizeResult realize_cn02(const SquareMatrix& m, SearchOptions options = {});

/// Search route only, no fast paths.
RealizeResult realize_cn02_by_search(const SquareMatrix& m, SearchOptions options = {});

/// Ladder route for matrices with M(i,j) = 0 whenever j - i >= 3.
RealizeResult realize_cn02_by_band_ladder(const SquareMatrix& m);

/// Symmetric (or strictly upper triangular) non-negative even T0 matrix ->
/// pure word with that CN matrix.
RealizeResult realize_cn_even(const SquareMatrix& m, SearchOptions options = {});

/// M with M + M^T non-negative even T0 -> pure word whose OU matrix is M.
RealizeResult realize_ou(const SquareMatrix& m, SearchOptions options = {});

/// Symmetric non-negative T0 M -> positive pure word whose crossing matrix is M.
RealizeResult realize_crossing_positive_pure(const SquareMatrix& m, SearchOptions options = {});

struct StandardForm {
  BraidWord pure;    // w followed by the inverse of `simple`
  BraidWord simple;  // permutation braid of w's permutation
  SquareMatrix pure_ou;    // U(pure)
  SquareMatrix simple_ou;  // U(simple), a simple matrix
};

StandardForm standard_form(const BraidWord& w);

}  // namespace crossmat
