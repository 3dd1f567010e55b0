#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulis {

/// A permutation of {1,...,n} in one-line notation. The empty sequence is the
/// permutation of length 0. Values are stored by 0-based position; positions
/// and values are reported 1-based in diagnostics and CLI output.
///
/// Instances are immutable after construction and all operations on them are
/// pure, so they are safe to share across threads.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
      const int v = values_[i];
      if (v < 1 || v > n) {
        throw std::invalid_argument(
            "not a permutation: value " + std::to_string(v) + " at position " +
            std::to_string(i + 1) + " is outside 1.." + std::to_string(n));
      }
      if (seen[v]) {
        throw std::invalid_argument("not a permutation: duplicate value " +
                                    std::to_string(v) + " at position " +
                                    std::to_string(i + 1));
      }
      seen[v] = 1;
    }
  }

  /// Wraps `values` without validation. For library internals that construct
  /// permutations known to be valid (enumeration, bijection images).
  static Permutation trusted(std::vector<int> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  const std::vector<int>& values() const { return values_; }

  /// Value at 0-based position.
  int operator[](int pos) const { return values_[static_cast<std::size_t>(pos)]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Parses comma-separated one-line notation, e.g. "3,5,1,2,4". The empty
/// string parses to the empty permutation.
inline Permutation parse_permutation(const std::string& text) {
  std::vector<int> vals;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) return Permutation{};
  while (true) {
    skip_ws();
    std::size_t end = i;
    while (end < text.size() && text[end] != ',') ++end;
    std::string tok = text.substr(i, end - i);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.pop_back();
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse permutation entry \"" + tok +
                                  "\" at position " + std::to_string(vals.size() + 1));
    }
    if (end == text.size()) break;
    i = end + 1;
  }
  return Permutation(std::move(vals));
}

inline std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = i + 1;
  return Permutation::trusted(std::move(q));
}

/// Entry i of the result is n+1-p[n+1-i] (1-based); an involution of the
/// symmetry group of the square acting on permutation diagrams.
inline Permutation reverse_complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = n + 1 - p[n - 1 - i];
  return Permutation::trusted(std::move(q));
}

/// p on the values 1..m followed by r shifted up by m.
inline Permutation direct_sum(const Permutation& p, const Permutation& r) {
  const int m = p.size();
  std::vector<int> q;
  q.reserve(static_cast<std::size_t>(m + r.size()));
  for (int i = 0; i < m; ++i) q.push_back(p[i]);
  for (int i = 0; i < r.size(); ++i) q.push_back(r[i] + m);
  return Permutation::trusted(std::move(q));
}

/// True iff no proper prefix of positions carries exactly the values 1..k.
inline bool is_sum_indecomposable(const Permutation& p) {
  const int n = p.size();
  if (n == 0) {
    throw std::invalid_argument("is_sum_indecomposable: undefined for the empty permutation");
  }
  int run_max = 0;
  for (int i = 0; i + 1 < n; ++i) {
    run_max = std::max(run_max, p[i]);
    if (run_max == i + 1) return false;
  }
  return true;
}

/// The unique maximal cut of p into strings s_1|s_2|...|s_l with every entry
/// of s_i larger than every entry of s_j for i<j. Each block is returned
/// pattern-normalized to a permutation of its own length; a skew
/// indecomposable permutation yields a single block.
inline std::vector<Permutation> skew_blocks(const Permutation& p) {
  const int n = p.size();
  std::vector<Permutation> blocks;
  int start = 0;
  int run_min = n + 1;
  for (int i = 0; i < n; ++i) {
    run_min = std::min(run_min, p[i]);
    if (run_min == n - i) {  // prefix 0..i holds exactly the top i+1 values
      std::vector<int> vals;
      vals.reserve(static_cast<std::size_t>(i - start + 1));
      for (int j = start; j <= i; ++j) vals.push_back(p[j] - (n - i - 1));
      blocks.push_back(Permutation::trusted(std::move(vals)));
      start = i + 1;
    }
  }
  return blocks;
}

inline bool is_skew_indecomposable(const Permutation& p) {
  if (p.empty()) {
    throw std::invalid_argument("is_skew_indecomposable: undefined for the empty permutation");
  }
  return skew_blocks(p).size() == 1;
}

inline bool is_involution(const Permutation& p) {
  for (int i = 0; i < p.size(); ++i)
    if (p[p[i] - 1] != i + 1) return false;
  return true;
}

inline int fixed_points(const Permutation& p) {
  int c = 0;
  for (int i = 0; i < p.size(); ++i)
    if (p[i] == i + 1) ++c;
  return c;
}

/// 0-based positions of entries larger than everything on their left.
inline std::vector<int> left_to_right_maxima(const Permutation& p) {
  std::vector<int> pos;
  int best = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > best) {
      best = p[i];
      pos.push_back(i);
    }
  }
  return pos;
}

/// 0-based positions of entries smaller than everything on their right.
inline std::vector<int> right_to_left_minima(const Permutation& p) {
  std::vector<int> pos;
  int best = p.size() + 1;
  for (int i = p.size() - 1; i >= 0; --i) {
    if (p[i] < best) {
      best = p[i];
      pos.push_back(i);
    }
  }
  std::reverse(pos.begin(), pos.end());
  return pos;
}

/// Searches for a subsequence of p order-isomorphic to q; returns its 0-based
/// positions, leftmost-lexicographically, or nullopt. Pruned backtracking;
/// adequate for the short patterns this library works with.
inline std::optional<std::vector<int>> find_occurrence(const Permutation& p,
                                                       const Permutation& q) {
  const int n = p.size();
  const int k = q.size();
  if (k < 1) throw std::invalid_argument("find_occurrence: pattern must be nonempty");
  if (k > n) return std::nullopt;
  std::vector<int> pos(static_cast<std::size_t>(k), 0);
  const auto consistent = [&](int t, int j) {
    for (int s = 0; s < t; ++s) {
      if ((p[pos[static_cast<std::size_t>(s)]] < p[j]) != (q[s] < q[t])) return false;
    }
    return true;
  };
  const auto search = [&](auto&& self, int t, int start) -> bool {
    if (t == k) return true;
    for (int j = start; j <= n - (k - t); ++j) {
      if (consistent(t, j)) {
        pos[static_cast<std::size_t>(t)] = j;
        if (self(self, t + 1, j + 1)) return true;
      }
    }
    return false;
  };
  if (search(search, 0, 0)) return pos;
  return std::nullopt;
}

inline bool contains_pattern(const Permutation& p, const Permutation& q) {
  return find_occurrence(p, q).has_value();
}

inline bool avoids(const Permutation& p, const Permutation& q) {
  return !contains_pattern(p, q);
}

/// Visits all n! permutations of length n in lexicographic order.
template <typename Visit>
void for_each_permutation(int n, Visit&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_permutation: negative length");
  std::vector<int> vals(static_cast<std::size_t>(n));
  std::iota(vals.begin(), vals.end(), 1);
  do {
    visit(Permutation::trusted(vals));
  } while (std::next_permutation(vals.begin(), vals.end()));
}

}  // namespace ulis
