#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ulis/dyck.hpp"
#include "ulis/permutation.hpp"
#include "ulis/plane_tree.hpp"
#include "ulis/tableau.hpp"

namespace ulis {

namespace detail {

/// Bijection entry points validate their avoidance precondition eagerly and
/// report a witness occurrence; silent garbage-in is the main hazard here.
inline void require_avoids(const Permutation& p, std::vector<int> pattern, const char* who) {
  const Permutation q(std::move(pattern));
  if (const auto occ = find_occurrence(p, q)) {
    std::string msg = std::string(who) + ": input contains " + ulis::to_string(q) +
                      " at positions ";
    std::string vals;
    for (std::size_t i = 0; i < occ->size(); ++i) {
      if (i) {
        msg += ',';
        vals += ',';
      }
      msg += std::to_string((*occ)[i] + 1);
      vals += std::to_string(p[(*occ)[i]]);
    }
    throw std::invalid_argument(msg + " (values " + vals + ")");
  }
}

inline PlaneTree plane_tree_rec(const Permutation& p) {
  if (p.empty()) return PlaneTree{};
  std::vector<Permutation> blocks = skew_blocks(p);
  if (blocks.size() == 1) {
    // A 132-avoiding skew indecomposable permutation ends in its maximum:
    // anything after n would complete a 132 with a smaller earlier entry.
    const int n = p.size();
    if (p[n - 1] != n) throw std::logic_error("plane_tree_rec: indecomposable input must end in its maximum");
    std::vector<int> head(p.values().begin(), p.values().end() - 1);
    PlaneTree root;
    root.children.push_back(plane_tree_rec(Permutation::trusted(std::move(head))));
    return root;
  }
  // Contract the roots of the block images: each block is indecomposable, so
  // each image root has exactly one child.
  PlaneTree root;
  root.children.reserve(blocks.size());
  for (const Permutation& b : blocks) {
    PlaneTree tb = plane_tree_rec(b);
    root.children.push_back(std::move(tb.children.front()));
  }
  return root;
}

inline void dyck_rec(const Permutation& p, std::vector<Step>& out) {
  if (p.empty()) return;
  std::vector<Permutation> blocks = skew_blocks(p);
  if (blocks.size() == 1) {
    const int n = p.size();
    if (p[n - 1] != n) throw std::logic_error("dyck_rec: indecomposable input must end in its maximum");
    out.push_back(Step::U);
    std::vector<int> head(p.values().begin(), p.values().end() - 1);
    dyck_rec(Permutation::trusted(std::move(head)), out);
    out.push_back(Step::D);
    return;
  }
  for (const Permutation& b : blocks) dyck_rec(b, out);
}

/// Inverse image of the step range [lo, hi), returned in one-line values.
inline std::vector<int> perm_from_dyck_range(const std::vector<Step>& s, int lo, int hi) {
  std::vector<std::vector<int>> blocks;
  int total = 0;
  int i = lo;
  while (i < hi) {
    int balance = 0;
    int j = i;
    do {
      balance += s[static_cast<std::size_t>(j)] == Step::U ? 1 : -1;
      ++j;
    } while (balance > 0);
    // s[i..j) is U w D for a Dyck word w
    std::vector<int> inner = perm_from_dyck_range(s, i + 1, j - 1);
    inner.push_back(static_cast<int>(inner.size()) + 1);
    total += static_cast<int>(inner.size());
    blocks.push_back(std::move(inner));
    i = j;
  }
  // reassemble skew blocks: earlier blocks carry the larger values
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(total));
  int offset = total;
  for (const std::vector<int>& b : blocks) {
    offset -= static_cast<int>(b.size());
    for (int v : b) out.push_back(v + offset);
  }
  return out;
}

}  // namespace detail

/// Maps a 132-avoiding permutation of length n to a plane tree on n+1
/// vertices. Skew indecomposable p = Ln becomes a root with one child whose
/// subtree is the image of L; otherwise the block images have their roots
/// contracted into a common root. Leaves at maximum distance from the root
/// correspond to the longest increasing subsequences of p.
inline PlaneTree to_plane_tree(const Permutation& p) {
  detail::require_avoids(p, {1, 3, 2}, "to_plane_tree");
  return detail::plane_tree_rec(p);
}

/// Maps a 132-avoiding permutation of length n to a Dyck path of semilength
/// n: U image(L) D for indecomposable p = Ln, concatenation of block images
/// otherwise.
inline DyckPath to_dyck_path(const Permutation& p) {
  detail::require_avoids(p, {1, 3, 2}, "to_dyck_path");
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * p.size()));
  detail::dyck_rec(p, steps);
  return DyckPath(std::move(steps));
}

/// Inverse of to_dyck_path; total on Dyck paths.
inline Permutation from_dyck_path(const DyckPath& d) {
  return Permutation::trusted(detail::perm_from_dyck_range(d.steps(), 0, d.length()));
}

/// The Claesson-Kitaev map f from 321-avoiding permutations of length n onto
/// sum indecomposable 321-avoiding permutations of length n+1: underline the
/// left-to-right maxima right of the entry 1 that are not right-to-left
/// minima, insert the new maximum n+1 immediately left of the entry 1
/// (underlined), then cyclically translate the underlined entries one notch
/// to the left.
inline Permutation claesson_kitaev(const Permutation& p) {
  detail::require_avoids(p, {3, 2, 1}, "claesson_kitaev");
  const int n = p.size();
  if (n == 0) {
    throw std::invalid_argument("claesson_kitaev: undefined for the empty permutation");
  }
  int pos1 = 0;
  while (p[pos1] != 1) ++pos1;

  std::vector<char> is_lr_max(static_cast<std::size_t>(n), 0);
  for (int i : left_to_right_maxima(p)) is_lr_max[static_cast<std::size_t>(i)] = 1;
  std::vector<char> is_rl_min(static_cast<std::size_t>(n), 0);
  for (int i : right_to_left_minima(p)) is_rl_min[static_cast<std::size_t>(i)] = 1;

  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(n + 1));
  std::vector<int> underlined;  // positions in the n+1 long vector, ascending
  for (int i = 0; i < n; ++i) {
    if (i == pos1) {
      underlined.push_back(static_cast<int>(vals.size()));
      vals.push_back(n + 1);
    }
    if (i > pos1 && is_lr_max[static_cast<std::size_t>(i)] && !is_rl_min[static_cast<std::size_t>(i)]) {
      underlined.push_back(static_cast<int>(vals.size()));
    }
    vals.push_back(p[i]);
  }

  const std::size_t t = underlined.size();
  std::vector<int> rotated(t);
  for (std::size_t i = 0; i < t; ++i) {
    rotated[i] = vals[static_cast<std::size_t>(underlined[(i + 1) % t])];
  }
  for (std::size_t i = 0; i < t; ++i) {
    vals[static_cast<std::size_t>(underlined[i])] = rotated[i];
  }
  return Permutation::trusted(std::move(vals));
}

/// Inverse of claesson_kitaev on sum indecomposable 321-avoiders of length
/// >= 2. The underlined set is recovered as the entry immediately left of
/// the entry 1 together with the left-to-right maxima right of 1 that are
/// not right-to-left minima; the cyclic translation is undone and the
/// maximum removed.
inline Permutation claesson_kitaev_inverse(const Permutation& r) {
  detail::require_avoids(r, {3, 2, 1}, "claesson_kitaev_inverse");
  const int m = r.size();
  if (m < 2) {
    throw std::invalid_argument("claesson_kitaev_inverse: input must have length >= 2");
  }
  if (!is_sum_indecomposable(r)) {
    throw std::invalid_argument("claesson_kitaev_inverse: input is sum decomposable");
  }
  int pos1 = 0;
  while (r[pos1] != 1) ++pos1;
  if (pos1 == 0) {
    throw std::logic_error("claesson_kitaev_inverse: indecomposable input cannot start with 1");
  }

  std::vector<char> is_lr_max(static_cast<std::size_t>(m), 0);
  for (int i : left_to_right_maxima(r)) is_lr_max[static_cast<std::size_t>(i)] = 1;
  std::vector<char> is_rl_min(static_cast<std::size_t>(m), 0);
  for (int i : right_to_left_minima(r)) is_rl_min[static_cast<std::size_t>(i)] = 1;

  std::vector<int> underlined{pos1 - 1};
  for (int i = pos1 + 1; i < m; ++i) {
    if (is_lr_max[static_cast<std::size_t>(i)] && !is_rl_min[static_cast<std::size_t>(i)]) {
      underlined.push_back(i);
    }
  }

  std::vector<int> vals = r.values();
  const std::size_t t = underlined.size();
  std::vector<int> rotated(t);
  for (std::size_t i = 0; i < t; ++i) {
    rotated[i] = vals[static_cast<std::size_t>(underlined[(i + t - 1) % t])];
  }
  for (std::size_t i = 0; i < t; ++i) {
    vals[static_cast<std::size_t>(underlined[i])] = rotated[i];
  }
  if (vals[static_cast<std::size_t>(pos1 - 1)] != m) {
    throw std::invalid_argument("claesson_kitaev_inverse: input is not in the image of the map");
  }
  vals.erase(vals.begin() + (pos1 - 1));
  return Permutation(std::move(vals));
}

/// Robinson-Schensted row insertion: returns the insertion tableau P and the
/// recording tableau Q; both share a shape whose first row length is the
/// length of the longest increasing subsequence.
inline std::pair<YoungTableau, YoungTableau> rs_pair(const Permutation& p) {
  std::vector<std::vector<int>> P, Q;
  for (int i = 0; i < p.size(); ++i) {
    int x = p[i];
    std::size_t row = 0;
    while (true) {
      if (row == P.size()) {
        P.push_back({x});
        Q.push_back({i + 1});
        break;
      }
      const auto it = std::upper_bound(P[row].begin(), P[row].end(), x);
      if (it == P[row].end()) {
        P[row].push_back(x);
        Q[row].push_back(i + 1);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {YoungTableau::from_rows(std::move(P)), YoungTableau::from_rows(std::move(Q))};
}

inline std::vector<int> rs_shape(const Permutation& p) { return rs_pair(p).first.shape(); }

}  // namespace ulis
