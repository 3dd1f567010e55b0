#pragma once

#include <algorithm>
#include <vector>

#include "ulis/numeric.hpp"
#include "ulis/permutation.hpp"

namespace ulis {

/// Rank of an entry = length of the longest increasing subsequence ending at
/// that entry (inclusive). lis_count is exact; the empty permutation counts
/// its empty subsequence once, so lis_count >= 1 always. ways[i] is the
/// number of increasing subsequences of length ranks[i] ending at i.
struct RankProfile {
  std::vector<int> ranks;
  std::vector<Integer> ways;
  int lis_length = 0;
  Integer lis_count = 1;
};

inline RankProfile rank_profile(const Permutation& p) {
  const int n = p.size();
  RankProfile out;
  out.ranks.assign(static_cast<std::size_t>(n), 1);
  out.ways.assign(static_cast<std::size_t>(n), 1);
  std::vector<Integer>& ways = out.ways;
  for (int i = 0; i < n; ++i) {
    int best = 0;
    for (int j = 0; j < i; ++j) {
      if (p[j] < p[i]) best = std::max(best, out.ranks[static_cast<std::size_t>(j)]);
    }
    out.ranks[static_cast<std::size_t>(i)] = best + 1;
    if (best > 0) {
      Integer w = 0;
      for (int j = 0; j < i; ++j) {
        if (p[j] < p[i] && out.ranks[static_cast<std::size_t>(j)] == best) {
          w += ways[static_cast<std::size_t>(j)];
        }
      }
      ways[static_cast<std::size_t>(i)] = std::move(w);
    }
    out.lis_length = std::max(out.lis_length, out.ranks[static_cast<std::size_t>(i)]);
  }
  if (n > 0) {
    Integer total = 0;
    for (int i = 0; i < n; ++i) {
      if (out.ranks[static_cast<std::size_t>(i)] == out.lis_length) {
        total += ways[static_cast<std::size_t>(i)];
      }
    }
    out.lis_count = std::move(total);
  }
  return out;
}

/// True iff exactly one increasing subsequence attains the maximal length.
/// The empty permutation has a unique (empty) one.
inline bool has_ulis(const Permutation& p) { return rank_profile(p).lis_count == 1; }

inline int lis_length(const Permutation& p) { return rank_profile(p).lis_length; }

/// 0-based positions grouped by rank (group r-1 holds rank r), each group in
/// left-to-right order. Entries of one rank form a decreasing subsequence.
inline std::vector<std::vector<int>> rank_classes(const Permutation& p) {
  const RankProfile prof = rank_profile(p);
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(prof.lis_length));
  for (int i = 0; i < p.size(); ++i) {
    classes[static_cast<std::size_t>(prof.ranks[static_cast<std::size_t>(i)] - 1)].push_back(i);
  }
  return classes;
}

/// 0-based positions of the unique longest increasing subsequence. Walks the
/// count DP backwards: at each rank exactly one entry can carry the chain.
inline std::vector<int> ulis_positions(const Permutation& p) {
  const RankProfile prof = rank_profile(p);
  if (prof.lis_count != 1) {
    throw std::invalid_argument("ulis_positions: no unique longest increasing subsequence");
  }
  std::vector<int> pos(static_cast<std::size_t>(prof.lis_length));
  int current = -1;
  for (int i = 0; i < p.size(); ++i) {
    if (prof.ranks[static_cast<std::size_t>(i)] == prof.lis_length) current = i;
  }
  for (int r = prof.lis_length; r >= 1; --r) {
    pos[static_cast<std::size_t>(r - 1)] = current;
    if (r == 1) break;
    for (int j = 0; j < current; ++j) {
      if (prof.ranks[static_cast<std::size_t>(j)] == r - 1 && p[j] < p[current]) {
        current = j;
        break;
      }
    }
  }
  return pos;
}

/// ranks indexed by value: entry v-1 is the rank of the entry with value v.
inline std::vector<int> value_ranks(const Permutation& p) {
  const RankProfile prof = rank_profile(p);
  std::vector<int> by_value(static_cast<std::size_t>(p.size()), 0);
  for (int i = 0; i < p.size(); ++i) {
    by_value[static_cast<std::size_t>(p[i] - 1)] = prof.ranks[static_cast<std::size_t>(i)];
  }
  return by_value;
}

}  // namespace ulis
