#pragma once

// BW-ladder diagrams: n vertical segments with horizontal rungs listed top to
// bottom. A black rung B(i,j) stands for a hook between the strands at
// positions i and j (two crossings between them, positions unchanged). A
// white rung W(i) is a half twist of positions i and i+1 (one crossing and a
// swap). Only W-ladders correspond to braid words.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crossmat/braid.hpp"
#include "crossmat/matrix.hpp"

namespace crossmat {

struct LadderEdge {
  enum class Kind : std::uint8_t { Black, White };

  Kind kind = Kind::White;
  int i = 1;  // left endpoint
  int j = 2;  // right endpoint; always i+1 for white rungs

  static LadderEdge black(int i, int j) { return {Kind::Black, i, j}; }
  static LadderEdge white(int i) { return {Kind::White, i, i + 1}; }

  bool is_black() const noexcept { return kind == Kind::Black; }
  bool is_white() const noexcept { return kind == Kind::White; }
  friend bool operator==(const LadderEdge&, const LadderEdge&) = default;
  friend auto operator<=>(const LadderEdge&, const LadderEdge&) = default;
};

class LadderDiagram {
public:
  explicit LadderDiagram(int n = 1) : n_(n) {
    if (n < 1) throw std::invalid_argument("segment count must be >= 1");
  }
  LadderDiagram(int n, std::vector<LadderEdge> edges);

  int segments() const noexcept { return n_; }
  const std::vector<LadderEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }

  void push_back(LadderEdge e);

  friend bool operator==(const LadderDiagram&, const LadderDiagram&) = default;

private:
  int n_;
  std::vector<LadderEdge> edges_;
};

struct LadderEval {
  SquareMatrix contribution;  // symmetric, indexed by strand identity
  Permutation perm;           // strand start -> end position
  friend bool operator==(const LadderEval&, const LadderEval&) = default;
};

enum class EdgeOrder {
  RowMajor,          // (1,2),(1,3),...,(2,3),...
  ColumnDescending,  // column by column, bottom row first: (l-1,l),(l-2,l),...
  Band,              // by i+j, then row: (1,2),(1,3),(2,3),(2,4),(3,4),...
};

/// One black rung per 2-entry of a strictly upper triangular (0,2)-matrix.
LadderDiagram b_ladder(const SquareMatrix& m, EdgeOrder order = EdgeOrder::RowMajor);

LadderEval eval_ladder(const LadderDiagram& l);

enum class MoveKind { L1 = 1, L2, L3, L4, L5, L6, L7, L8, L9 };
enum class Direction { Forward, Backward };

/// Forward rewrites the left-hand side as written in the move table:
///   L1  B(i,i+1)            <-> W(i) W(i)
///   L2  B(i,j) B(k,l)       <-> B(k,l) B(i,j)
///   L3  W(k) W(l)           <-> W(l) W(k)            |k-l| > 1
///   L4  W(i) W(i+1) W(i)    <-> W(i+1) W(i) W(i+1)
///   L5  B(i,j) W(k)         <-> W(k) B(i,j)          j<k, k+1<i or i<k<k+1<j
///   L6  B(i,j) W(i)         <-> W(i) B(i+1,j)        i+1 < j
///   L7  W(i) B(i,j)         <-> B(i+1,j) W(i)        i+1 < j
///   L8  B(i,j) W(j-1)       <-> W(j-1) B(i,j-1)      i < j-1
///   L9  W(j-1) B(i,j)       <-> B(i,j-1) W(j-1)      i < j-1
struct Move {
  MoveKind kind = MoveKind::L1;
  Direction direction = Direction::Forward;
  friend bool operator==(const Move&, const Move&) = default;
};

class MoveError : public std::invalid_argument {
public:
  enum class Reason { PatternMismatch, SideCondition };
  MoveError(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

private:
  Reason reason_;
};

/// Applies the move to the edges starting at 0-based offset `at`.
/// Throws MoveError when the edges do not match or a side condition fails.
LadderDiagram apply_move(const LadderDiagram& l, Move move, std::size_t at);

/// Number of edges the move's matched side occupies.
std::size_t move_span(Move move);

bool is_w_ladder(const LadderDiagram& l);

/// W(l-1) W(l-2) ... W(k) W(k) ... W(l-2) W(l-1) on n segments.
LadderDiagram hook_column_expand(int n, int l, int k);

/// Hook column B(l-1,l) B(l-2,l) ... B(k,l) on n segments.
LadderDiagram hook_column(int n, int l, int k);

using MoveScript = std::vector<std::pair<Move, std::size_t>>;

/// The explicit L1/L9 sequence turning hook_column(n,l,k) into hook_column_expand(n,l,k).
MoveScript hook_column_script(int l, int k);

LadderDiagram replay(LadderDiagram l, const MoveScript& script);

/// For a T0 strictly upper triangular (0,2)-matrix with M(i,j) = 0 when
/// j - i >= 3: band-ordered B-ladder, L1 on adjacent hooks, then each
/// B(k,k+2) is slid onto a neighbouring half twist with L7 or L8 and
/// finished with L1. Returns nullopt when the matrix is outside that class.
std::optional<std::pair<LadderDiagram, MoveScript>> band_ladder_to_w(const SquareMatrix& m);

struct RewriteStats {
  std::size_t expanded = 0;
  bool exhausted = false;  // the whole reachable space was explored
};

/// Best-first search over ladder moves for a W-ladder with the same eval.
/// Rungs are never longer than the eval's total contribution, so the
/// reachable space is finite; `budget` caps the number of expanded states.
std::optional<LadderDiagram> rewrite_to_w(const LadderDiagram& l, std::size_t budget,
                                          RewriteStats* stats = nullptr);

/// White rungs become positive letters. Throws std::invalid_argument on a black rung.
BraidWord ladder_to_word(const LadderDiagram& l);

/// "B1,3 W2 W1"
LadderDiagram parse_ladder(std::string_view text, int n);
std::string format_ladder(const LadderDiagram& l);
std::string format_move(Move move);
/// "L6", "L6+", "L6-" (sign selects direction; default forward).
Move parse_move(std::string_view text);

/// ASCII drawing: one line per rung, segments as '|', black rungs as
/// '*===*', white rungs as 'o---o', crossed intermediate segments as '+'.
std::string render_ladder(const LadderDiagram& l);

}  // namespace crossmat
