#include "crossmat/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace crossmat {

SquareMatrix::SquareMatrix(int n)
    : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 0) throw std::invalid_argument("matrix dimension must be >= 0");
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  SquareMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("matrix is not square: row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) m(i, j) = row[static_cast<std::size_t>(j - 1)];
  }
  return m;
}

std::vector<std::vector<int>> SquareMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out[static_cast<std::size_t>(i - 1)].push_back((*this)(i, j));
  return out;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("matrix sizes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

bool SquareMatrix::zero_diagonal() const noexcept {
  for (int i = 1; i <= n_; ++i)
    if ((*this)(i, i) != 0) return false;
  return true;
}

bool SquareMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](int v) { return v == 0; });
}

bool SquareMatrix::symmetric() const noexcept {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool SquareMatrix::non_negative() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](int v) { return v >= 0; });
}

bool SquareMatrix::all_even() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](int v) { return v % 2 == 0; });
}

bool SquareMatrix::strictly_upper() const noexcept {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= i; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

long SquareMatrix::upper_sum() const noexcept {
  long total = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) total += (*this)(i, j);
  return total;
}

SquareMatrix ou_matrix(const BraidWord& w) {
  SquareMatrix u(w.strands());
  for_each_crossing(w, [&](const Crossing& c) { ++u(c.over(), c.under()); });
  return u;
}

SquareMatrix ou_matrix(const BraidWord& w, const Permutation& order) {
  if (order.size() != w.strands()) {
    throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                " points but the word has " + std::to_string(w.strands()) +
                                " strands");
  }
  const Permutation rank = order.inverse();  // strand -> its place in the order
  SquareMatrix u(w.strands());
  for_each_crossing(w, [&](const Crossing& c) { ++u(rank(c.over()), rank(c.under())); });
  return u;
}

SquareMatrix cn_matrix(const BraidWord& w) {
  SquareMatrix m(w.strands());
  for_each_crossing(w, [&](const Crossing& c) {
    ++m(c.left_strand, c.right_strand);
    ++m(c.right_strand, c.left_strand);
  });
  return m;
}

SquareMatrix crossing_matrix(const BraidWord& w) {
  SquareMatrix m(w.strands());
  for_each_crossing(w, [&](const Crossing& c) {
    m(c.over(), c.under()) += c.sign == Sign::Positive ? 1 : -1;
  });
  return m;
}

std::optional<Triple> t0_violation(const SquareMatrix& m) {
  const int n = m.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (m(i, j) == 0 && m(j, k) == 0 && m(i, k) != 0) return Triple{i, j, k};
  return std::nullopt;
}

std::optional<Triple> t1_violation(const SquareMatrix& m) {
  const int n = m.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (m(i, j) != 0 && m(j, k) != 0 && m(i, k) == 0) return Triple{i, j, k};
  return std::nullopt;
}

namespace {

bool zero_one(const SquareMatrix& m) {
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j)
      if (m(i, j) != 0 && m(i, j) != 1) return false;
  return true;
}

}  // namespace

bool is_simple(const SquareMatrix& m) {
  return m.strictly_upper() && zero_one(m) && is_t0(m) && is_t1(m);
}

bool is_double_simple(const SquareMatrix& m) {
  return m.zero_diagonal() && m.symmetric() && zero_one(m) && is_t0(m) && is_t1(m);
}

SquareMatrix reverse_matrix(const SquareMatrix& m) {
  const int n = m.size();
  SquareMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r(i, j) = m(n + 1 - i, n + 1 - j);
  return r;
}

SquareMatrix permute_matrix(const SquareMatrix& m, const Permutation& p) {
  if (p.size() != m.size()) throw std::invalid_argument("permute_matrix: size mismatch");
  SquareMatrix out(m.size());
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) out(p(i), p(j)) = m(i, j);
  return out;
}

SquareMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return SquareMatrix(0);
  std::vector<std::vector<int>> rows;
  if (text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed matrix: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("malformed matrix: expected an array of rows");
    for (const auto& row : j) {
      if (!row.is_array()) throw std::invalid_argument("malformed matrix: row is not an array");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) {
          throw std::invalid_argument("malformed matrix: entry " + v.dump() + " is not an integer");
        }
        r.push_back(v.get<int>());
      }
      rows.push_back(std::move(r));
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::vector<int> r;
      std::string token;
      while (ls >> token) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size() || token.empty()) {
          throw std::invalid_argument("malformed matrix: '" + token + "' is not an integer");
        }
        r.push_back(v);
      }
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  return SquareMatrix::from_rows(rows);
}

std::string format_matrix_array(const SquareMatrix& m) {
  std::string out = "[";
  for (int i = 1; i <= m.size(); ++i) {
    if (i > 1) out += ',';
    out += '[';
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) out += ',';
      out += std::to_string(m(i, j));
    }
    out += ']';
  }
  return out + "]";
}

std::string format_matrix_grid(const SquareMatrix& m) {
  std::size_t width = 1;
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) width = std::max(width, std::to_string(m(i, j)).size());
  std::string out;
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      const std::string v = std::to_string(m(i, j));
      if (j > 1) out += ' ';
      out.append(width - v.size(), ' ');
      out += v;
    }
    out += '\n';
  }
  return out;
}

}  // namespace crossmat
