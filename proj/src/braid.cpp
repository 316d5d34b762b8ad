#include "crossmat/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crossmat {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

long parse_int_token(std::string_view token) {
  long value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) {
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

// Permutation

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(std::max(n, 0))) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return from_images(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

int Permutation::inversions() const noexcept {
  int count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++count;
  return count;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("compose: permutation sizes differ");
  }
  std::vector<int> images(static_cast<std::size_t>(inner.size()));
  for (int k = 1; k <= inner.size(); ++k) images[static_cast<std::size_t>(k - 1)] = outer(inner(k));
  return Permutation::from_images(std::move(images));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  text = trim(text);
  if (text.empty()) return Permutation(0);
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    images.push_back(static_cast<int>(parse_int_token(trim(text.substr(start, comma - start)))));
    start = comma + 1;
  }
  return Permutation::from_images(std::move(images));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int k = 1; k <= p.size(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(p(k));
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// BraidWord

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
}

BraidWord::BraidWord(int n, std::vector<Letter> letters) : BraidWord(n) {
  for (const Letter& l : letters) push_back(l);
}

void BraidWord::push_back(Letter l) {
  if (l.index < 1 || l.index > n_ - 1) {
    throw std::invalid_argument("letter index " + std::to_string(l.index) + " outside [1, " +
                                std::to_string(n_ - 1) + "]");
  }
  letters_.push_back(l);
}

BraidWord parse_word(std::string_view text, std::optional<int> n) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  int widest = 0;
  while (in >> token) {
    const long v = parse_int_token(token);
    if (v == 0) throw std::invalid_argument("zero is not a braid letter");
    const int index = static_cast<int>(v < 0 ? -v : v);
    if (n && index >= *n) {
      throw std::invalid_argument("letter " + token + " needs more than " + std::to_string(*n) +
                                  " strands");
    }
    widest = std::max(widest, index);
    letters.push_back({index, v > 0 ? Sign::Positive : Sign::Negative});
  }
  return BraidWord(n.value_or(widest + 1), std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.signed_value());
  }
  return out;
}

BraidWord make_word(int n, std::initializer_list<int> signed_letters) {
  BraidWord w(n);
  for (int v : signed_letters) {
    if (v == 0) throw std::invalid_argument("zero is not a braid letter");
    w.push_back({v < 0 ? -v : v, v > 0 ? Sign::Positive : Sign::Negative});
  }
  return w;
}

std::vector<int> final_positions(const BraidWord& w) {
  std::vector<int> strand_at(static_cast<std::size_t>(w.strands()));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (const Letter& l : w.letters()) {
    std::swap(strand_at[static_cast<std::size_t>(l.index - 1)],
              strand_at[static_cast<std::size_t>(l.index)]);
  }
  return strand_at;
}

Permutation braid_permutation(const BraidWord& w) {
  const auto strand_at = final_positions(w);
  std::vector<int> images(strand_at.size());
  for (std::size_t p = 0; p < strand_at.size(); ++p) {
    images[static_cast<std::size_t>(strand_at[p] - 1)] = static_cast<int>(p) + 1;
  }
  return Permutation::from_images(std::move(images));
}

bool is_pure(const BraidWord& w) { return braid_permutation(w).is_identity(); }

bool is_positive(const BraidWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [](const Letter& l) { return l.positive(); });
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("concat: strand counts differ (" + std::to_string(a.strands()) +
                                " vs " + std::to_string(b.strands()) + ")");
  }
  BraidWord out = a;
  for (const Letter& l : b.letters()) out.push_back(l);
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out(w.strands());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back({it->index, it->positive() ? Sign::Negative : Sign::Positive});
  }
  return out;
}

BraidWord reverse_diagram(const BraidWord& w) {
  BraidWord out(w.strands());
  for (const Letter& l : w.letters()) out.push_back({w.strands() - l.index, l.sign});
  return out;
}

BraidWord make_positive(const BraidWord& w) {
  BraidWord out(w.strands());
  for (const Letter& l : w.letters()) out.push_back({l.index, Sign::Positive});
  return out;
}

BraidWord permutation_braid(const Permutation& p) {
  const int n = std::max(p.size(), 1);
  BraidWord out(n);
  // target[q] = final position wanted by the strand currently at position q+1
  std::vector<int> target = p.images();
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int q = 0; q + 1 < p.size(); ++q) {
      auto& left = target[static_cast<std::size_t>(q)];
      auto& right = target[static_cast<std::size_t>(q + 1)];
      if (left > right) {
        out.push_back({q + 1, Sign::Positive});
        std::swap(left, right);
        swapped = true;
      }
    }
  }
  return out;
}

}  // namespace crossmat
