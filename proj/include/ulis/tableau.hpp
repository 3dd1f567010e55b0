#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ulis {

/// Standard Young tableau on the boxes of a partition shape: rows strictly
/// increase left to right, columns strictly increase top to bottom, row
/// lengths weakly decrease, and the entries are exactly 1..n.
class YoungTableau {
 public:
  YoungTableau() = default;  // the empty tableau (n = 0)

  static YoungTableau from_rows(std::vector<std::vector<int>> rows) {
    YoungTableau t;
    t.rows_ = std::move(rows);
    t.validate();
    return t;
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  std::vector<int> shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
  }

  int boxes() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
  }

  /// One row per line, entries space-separated.
  std::string to_string() const {
    std::string out;
    for (const auto& r : rows_) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j) out += ' ';
        out += std::to_string(r[j]);
      }
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  void validate() const {
    const int n = boxes();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& row = rows_[i];
      if (row.empty()) throw std::invalid_argument("not a tableau: empty row");
      if (i > 0 && row.size() > rows_[i - 1].size()) {
        throw std::invalid_argument("not a tableau: row lengths must weakly decrease");
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        const int v = row[j];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
          throw std::invalid_argument("not a tableau: entries must be exactly 1.." +
                                      std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = 1;
        if (j > 0 && row[j - 1] >= v) {
          throw std::invalid_argument("not a tableau: rows must strictly increase");
        }
        if (i > 0 && rows_[i - 1][j] >= v) {
          throw std::invalid_argument("not a tableau: columns must strictly increase");
        }
      }
    }
  }

  std::vector<std::vector<int>> rows_;
};

/// Number of columns of odd length.
inline int odd_columns(const YoungTableau& t) {
  const std::vector<int> shape = t.shape();
  const int width = shape.empty() ? 0 : shape.front();
  int odd = 0;
  for (int j = 0; j < width; ++j) {
    int len = 0;
    for (int rl : shape) {
      if (rl > j) ++len;
    }
    odd += len % 2;
  }
  return odd;
}

}  // namespace ulis
