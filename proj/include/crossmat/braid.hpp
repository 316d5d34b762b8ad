#pragma once

// Braid words read as diagrams: n strands, crossings listed top to bottom.
//
// Positions and strands are 1-based. Strand k is the strand that starts at
// top position k. A positive letter (i,+) means the strand currently at
// position i passes OVER the strand at position i+1; (i,-) means it passes
// under.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossmat {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

struct Letter {
  int index = 1;
  Sign sign = Sign::Positive;

  bool positive() const noexcept { return sign == Sign::Positive; }
  int signed_value() const noexcept { return positive() ? index : -index; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Permutation {
public:
  /// Identity on n points.
  explicit Permutation(int n = 0);
  /// images[k-1] = image of k. Throws std::invalid_argument unless a bijection on {1..n}.
  static Permutation from_images(std::vector<int> images);
  static Permutation identity(int n) { return Permutation(n); }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  int inversions() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// (outer o inner)(k) = outer(inner(k)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// "3,1,2" -> images (3,1,2).
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

/// All n! permutations in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);

class BraidWord {
public:
  explicit BraidWord(int n = 1);
  /// Throws std::invalid_argument when a letter index is outside [1, n-1].
  BraidWord(int n, std::vector<Letter> letters);

  int strands() const noexcept { return n_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(Letter l);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int n_;
  std::vector<Letter> letters_;
};

/// Whitespace-separated nonzero integers; |k| is the index and sign(k) the
/// crossing sign. Without n the strand count is 1 + max|k| (1 for an empty word).
BraidWord parse_word(std::string_view text, std::optional<int> n = std::nullopt);
std::string format_word(const BraidWord& w);

/// Convenience for tests and literals: signed letter values.
BraidWord make_word(int n, std::initializer_list<int> signed_letters);

/// Strand-start position -> strand-end position.
Permutation braid_permutation(const BraidWord& w);

/// strand_at[p-1] after the whole word: which strand sits at bottom position p.
std::vector<int> final_positions(const BraidWord& w);

/// One crossing as seen while sweeping the diagram top to bottom.
struct Crossing {
  std::size_t letter;  // 0-based offset into the word
  int position;        // left position of the crossing
  int left_strand;     // strand at `position` just above the crossing
  int right_strand;    // strand at `position + 1`
  Sign sign;

  int over() const noexcept { return sign == Sign::Positive ? left_strand : right_strand; }
  int under() const noexcept { return sign == Sign::Positive ? right_strand : left_strand; }
};

/// Calls f(const Crossing&) for every letter of w in order.
template <typename F>
void for_each_crossing(const BraidWord& w, F&& f) {
  std::vector<int> strand_at(static_cast<std::size_t>(w.strands()));
  for (int p = 0; p < w.strands(); ++p) strand_at[static_cast<std::size_t>(p)] = p + 1;
  std::size_t offset = 0;
  for (const Letter& l : w.letters()) {
    auto& a = strand_at[static_cast<std::size_t>(l.index - 1)];
    auto& b = strand_at[static_cast<std::size_t>(l.index)];
    f(Crossing{offset++, l.index, a, b, l.sign});
    std::swap(a, b);
  }
}

bool is_pure(const BraidWord& w);
bool is_positive(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
/// Rotation about the vertical axis: (i, s) -> (n - i, s).
BraidWord reverse_diagram(const BraidWord& w);
/// Every letter made positive; positions (hence CN matrix and permutation) unchanged.
BraidWord make_positive(const BraidWord& w);

/// Bubble-sort reduced positive word for p. Each pair a<b crosses exactly
/// once iff p(a) > p(b), and the strand on the left passes over.
BraidWord permutation_braid(const Permutation& p);

}  // namespace crossmat
