// Independent reference implementations used only by tests. Everything here
// is deliberately naive: exhaustive enumeration over subsequences or whole
// symmetric groups, with no shared code paths with the library algorithms
// they check.
#pragma once

#include <algorithm>
#include <vector>

#include "ulis/numeric.hpp"
#include "ulis/permutation.hpp"

namespace ulis::oracle {

/// Pattern containment by checking every k-subset of positions.
inline bool contains_by_enumeration(const Permutation& p, const Permutation& q) {
  const int n = p.size();
  const int k = q.size();
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    bool iso = true;
    for (int s = 0; s < k && iso; ++s) {
      for (int t = s + 1; t < k && iso; ++t) {
        if ((p[idx[static_cast<std::size_t>(s)]] < p[idx[static_cast<std::size_t>(t)]]) !=
            (q[s] < q[t])) {
          iso = false;
        }
      }
    }
    if (iso) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < k; ++t) {
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
}

/// (max length, count at max length) over all increasing subsequences,
/// enumerated by depth-first extension. The empty permutation reports (0, 1)
/// for its empty subsequence.
inline std::pair<int, Integer> lis_by_enumeration(const Permutation& p) {
  const int n = p.size();
  int best = 0;
  Integer count = 0;
  const auto extend = [&](auto&& self, int last_pos, int length) -> void {
    if (length > best) {
      best = length;
      count = 0;
    }
    if (length == best) ++count;
    for (int j = last_pos + 1; j < n; ++j) {
      if (last_pos < 0 || p[j] > p[last_pos]) self(self, j, length + 1);
    }
  };
  extend(extend, -1, 0);
  return {best, count};
}

/// Avoiders of q among all n! permutations, kept in emission order.
inline std::vector<Permutation> avoiders_by_filter(const Permutation& q, int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (!contains_by_enumeration(p, q)) out.push_back(p);
  });
  return out;
}

}  // namespace ulis::oracle
