#pragma once

// Square integer matrices attached to braid diagrams: the OU matrix U(B,pi),
// the crossing-number matrix N(B) and the signed crossing matrix C(B), plus
// the triple predicates used to characterize them.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossmat/braid.hpp"

namespace crossmat {

/// Dense n x n integer matrix with 1-based (row, column) access.
class SquareMatrix {
public:
  explicit SquareMatrix(int n = 0);
  /// Rows must all have length rows.size(). Throws std::invalid_argument otherwise.
  static SquareMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const noexcept { return n_; }
  int& operator()(int i, int j) { return data_[index(i, j)]; }
  int operator()(int i, int j) const { return data_[index(i, j)]; }

  std::vector<std::vector<int>> rows() const;

  SquareMatrix transpose() const;
  SquareMatrix& operator+=(const SquareMatrix& other);
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  bool zero_diagonal() const noexcept;
  bool is_zero() const noexcept;
  bool symmetric() const noexcept;
  bool non_negative() const noexcept;
  bool all_even() const noexcept;
  bool strictly_upper() const noexcept;
  /// Sum over i < j of M(i,j).
  long upper_sum() const noexcept;

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<int> data_;
};

/// A violating triple i < j < k, 1-based.
using Triple = std::array<int, 3>;

SquareMatrix ou_matrix(const BraidWord& w);
/// Entry (i,j) counts crossings where strand order(i) passes over strand order(j).
SquareMatrix ou_matrix(const BraidWord& w, const Permutation& order);
SquareMatrix cn_matrix(const BraidWord& w);
SquareMatrix crossing_matrix(const BraidWord& w);

/// M(i,j) = M(j,k) = 0 implies M(i,k) = 0 for all i<j<k. Returns the first
/// violating triple in lexicographic order, if any.
std::optional<Triple> t0_violation(const SquareMatrix& m);
/// M(i,j), M(j,k) != 0 implies M(i,k) != 0 for all i<j<k.
std::optional<Triple> t1_violation(const SquareMatrix& m);

inline bool is_t0(const SquareMatrix& m) { return !t0_violation(m); }
inline bool is_t1(const SquareMatrix& m) { return !t1_violation(m); }

/// Strictly upper triangular, entries in {0,1}, T0 and T1.
bool is_simple(const SquareMatrix& m);
/// Symmetric, entries in {0,1}, T0 and T1.
bool is_double_simple(const SquareMatrix& m);

/// M'(i,j) = M(n+1-i, n+1-j).
SquareMatrix reverse_matrix(const SquareMatrix& m);

/// M^p(i,j) = M(p^-1(i), p^-1(j)). This is a right action:
/// permute_matrix(permute_matrix(M, p), s) == permute_matrix(M, compose(s, p)).
SquareMatrix permute_matrix(const SquareMatrix& m, const Permutation& p);

/// Accepts "[[0,1],[1,0]]" or a whitespace grid with one row per line.
SquareMatrix parse_matrix(std::string_view text);
/// "[[0,1],[1,0]]"
std::string format_matrix_array(const SquareMatrix& m);
/// Right-aligned rows, one per line, each terminated by '\n'.
std::string format_matrix_grid(const SquareMatrix& m);

}  // namespace crossmat
