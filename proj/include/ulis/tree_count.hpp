#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ulis/numeric.hpp"

namespace ulis {

inline Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("binomial: need 0 <= k <= n");
  }
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is binomial(n-k+i, i) after this step
  }
  return r;
}

inline Integer catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

/// Exact counting of plane trees by height, with heights measured in edges.
///
/// Tables over 1 <= n <= N vertices:
///   t(n,h)  trees with n vertices and height <= h
///   F(m,h)  ordered forests with m total vertices, every tree height <= h;
///           F(0,h) = 1, and h = -1 admits only the empty forest
///   G(m,h)  ordered pairs (left forest, right forest) with m total vertices,
///           every tree height <= h
///   w(n,h)  trees with n vertices, height exactly h, and a unique leaf at
///           maximum depth
///
/// The deepest leaf of a tree counted by w lives in exactly one child
/// subtree, itself counted by w one level down; the remaining children split
/// into a left and a right forest strictly shallower than that child:
///   w(1,0) = 1,   w(n,h) = sum_k w(k,h-1) * G(n-1-k, h-2).
class TreeCountDp {
 public:
  static constexpr int kMaxVertices = 400;

  explicit TreeCountDp(int max_vertices) : n_(max_vertices) {
    if (max_vertices < 1 || max_vertices > kMaxVertices) {
      throw std::invalid_argument("TreeCountDp: max_vertices must be in 1.." +
                                  std::to_string(kMaxVertices));
    }
    build();
  }

  int max_vertices() const { return n_; }

  /// t(n,h) for 1 <= n <= N, 0 <= h <= N-1.
  const Integer& trees_height_at_most(int n, int h) const {
    check(n >= 1 && n <= n_ && h >= 0 && h <= n_ - 1, "trees_height_at_most");
    return t_[static_cast<std::size_t>(h)][static_cast<std::size_t>(n)];
  }

  /// F(m,h) for 0 <= m <= N-1, -1 <= h <= N-2.
  const Integer& forests_height_at_most(int m, int h) const {
    check(m >= 0 && m <= n_ - 1 && h >= -1 && h <= n_ - 2, "forests_height_at_most");
    return f_[static_cast<std::size_t>(h + 1)][static_cast<std::size_t>(m)];
  }

  /// w(n,h) for 1 <= n <= N, 0 <= h <= N-1.
  const Integer& unique_deepest_exact_height(int n, int h) const {
    check(n >= 1 && n <= n_ && h >= 0 && h <= n_ - 1, "unique_deepest_exact_height");
    return w_[static_cast<std::size_t>(h)][static_cast<std::size_t>(n)];
  }

  /// Trees on n vertices with exactly one leaf at maximum depth.
  Integer unique_deepest_leaf_trees(int n) const {
    check(n >= 1 && n <= n_, "unique_deepest_leaf_trees");
    Integer total = 0;
    for (int h = 0; h <= n - 1; ++h) {
      total += w_[static_cast<std::size_t>(h)][static_cast<std::size_t>(n)];
    }
    return total;
  }

 private:
  static void check(bool ok, const char* who) {
    if (!ok) throw std::invalid_argument(std::string(who) + ": argument out of table range");
  }

  void build() {
    const std::size_t N = static_cast<std::size_t>(n_);
    const std::size_t heights = N;      // h = 0..N-1
    const std::size_t fheights = N + 1; // h = -1..N-1, stored shifted by one
    f_.assign(fheights, std::vector<Integer>(N, 0));
    g_.assign(fheights, std::vector<Integer>(N, 0));
    t_.assign(heights, std::vector<Integer>(N + 1, 0));
    w_.assign(heights, std::vector<Integer>(N + 1, 0));

    // F(m,-1) = [m == 0]; G likewise
    f_[0][0] = 1;
    g_[0][0] = 1;

    for (std::size_t h = 0; h < heights; ++h) {
      // t(1,h) = 1; t(n,h) = F(n-1, h-1) for n >= 2
      t_[h][1] = 1;
      for (std::size_t n = 2; n <= N; ++n) {
        if (n - 1 <= N - 1) t_[h][n] = f_[h][n - 1];
      }
      // F(m,h) = sum_{k=1..m} t(k,h) F(m-k,h)
      auto& row = f_[h + 1];
      row[0] = 1;
      for (std::size_t m = 1; m < N; ++m) {
        Integer acc = 0;
        for (std::size_t k = 1; k <= m; ++k) acc += t_[h][k] * row[m - k];
        row[m] = std::move(acc);
      }
      // G(m,h) = sum_a F(a,h) F(m-a,h)
      for (std::size_t m = 0; m < N; ++m) {
        Integer acc = 0;
        for (std::size_t a = 0; a <= m; ++a) acc += row[a] * row[m - a];
        g_[h + 1][m] = std::move(acc);
      }
    }

    w_[0][1] = 1;
    for (std::size_t h = 1; h < heights; ++h) {
      for (std::size_t n = 2; n <= N; ++n) {
        Integer acc = 0;
        for (std::size_t k = 1; k <= n - 1; ++k) {
          const Integer& deep = w_[h - 1][k];
          if (deep == 0) continue;
          acc += deep * g_[h - 1][n - 1 - k];  // side forests of height <= h-2
        }
        w_[h][n] = std::move(acc);
      }
    }
  }

  int n_;
  std::vector<std::vector<Integer>> t_, f_, g_, w_;
};

/// Trees on n vertices with a unique deepest leaf; builds a one-shot table.
inline Integer count_unique_deepest_leaf_trees(int n) {
  if (n < 1) throw std::invalid_argument("count_unique_deepest_leaf_trees: need n >= 1");
  return TreeCountDp(n).unique_deepest_leaf_trees(n);
}

/// u_n(132) in polynomial time: the 132-avoiders of length n with a unique
/// longest increasing subsequence correspond to plane trees on n+1 vertices
/// with a unique deepest leaf.
inline Integer u132_fast(int n) {
  if (n < 0) throw std::invalid_argument("u132_fast: negative length");
  return count_unique_deepest_leaf_trees(n + 1);
}

struct RatioRow {
  int n = 0;
  Rational ratio;            // u_n(132) / C_n, exact
  bool decreased = true;     // ratio < previous row's ratio (rows n >= 4)
  bool at_least_half = true; // ratio >= 1/2
};

/// Exact u_n(132)/C_n rows for n = 1..max_n. Diagnostic flags mark the rows
/// that break the conjectured monotone-decreasing (n >= 3) or >= 1/2
/// behaviour; they are report annotations, not assertions.
inline std::vector<RatioRow> ratio_report(int max_n) {
  if (max_n < 1) throw std::invalid_argument("ratio_report: need max_n >= 1");
  TreeCountDp dp(max_n + 1);
  std::vector<RatioRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  Rational prev;
  for (int n = 1; n <= max_n; ++n) {
    RatioRow row;
    row.n = n;
    row.ratio = Rational(dp.unique_deepest_leaf_trees(n + 1), catalan(n));
    row.at_least_half = row.ratio >= Rational(1, 2);
    row.decreased = n < 4 || row.ratio < prev;
    prev = row.ratio;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ulis
