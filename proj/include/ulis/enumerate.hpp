#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ulis/lis.hpp"
#include "ulis/numeric.hpp"
#include "ulis/permutation.hpp"

namespace ulis {

/// Default guard for avoider streams; C_14 = 2,674,440 objects. Raise the
/// ceiling explicitly to accept the cost of larger lengths.
inline constexpr int kAvoiderCeiling = 14;

/// Hard cap from the value-bitmask width used by the generator.
inline constexpr int kAvoiderLengthLimit = 32;

enum class ObjectClass {
  permutations,               // q-avoiders with a unique longest increasing subsequence
  involutions,                // q-avoiding involutions with one
  ballot,                     // bidirectional ballot sequences
  avoiders_total,             // all q-avoiders (Catalan)
  involution_avoiders_total,  // all q-avoiding involutions
};

enum class CountMethod { brute, series, tree_dp };

inline const char* to_string(ObjectClass c) {
  switch (c) {
    case ObjectClass::permutations: return "permutations";
    case ObjectClass::involutions: return "involutions";
    case ObjectClass::ballot: return "ballot";
    case ObjectClass::avoiders_total: return "avoiders-total";
    case ObjectClass::involution_avoiders_total: return "involution-avoiders-total";
  }
  return "?";
}

inline const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::series: return "series";
    case CountMethod::tree_dp: return "tree-dp";
  }
  return "?";
}

/// An (n -> exact count) table with the provenance needed to render it.
struct CountTable {
  std::optional<Permutation> pattern;
  ObjectClass object_class = ObjectClass::permutations;
  CountMethod method = CountMethod::brute;
  std::vector<std::pair<int, Integer>> rows;  // sorted by n, no gaps
};

namespace detail {

inline std::uint64_t low_value_bits(int v) {
  return v >= 64 ? ~0ull : ((v <= 0) ? 0ull : ((1ull << v) - 1));
}

/// Bits for the values lo..hi inclusive (1-based); empty when lo > hi.
inline std::uint64_t value_range_bits(int lo, int hi) {
  if (lo > hi) return 0;
  return low_value_bits(hi) & ~low_value_bits(lo - 1);
}

/// Values v (bit v-1) whose appending to `prefix` completes no q-occurrence
/// ending at the new final position. Occurrences entirely inside the prefix
/// were excluded when their own final entry was appended, so extending only
/// through allowed values prunes the search to exactly the avoiders.
inline std::uint64_t allowed_extension_bits(const std::vector<int>& prefix, int n,
                                            const Permutation& q) {
  const std::uint64_t all = low_value_bits(n);
  const int k = static_cast<int>(prefix.size());
  if (k < 2) return all;
  const int code = 100 * q[0] + 10 * q[1] + q[2];
  switch (code) {
    case 123: {
      // v completes an occurrence as the "3" iff some ascent top lies below v
      int top = n + 1;
      int run_min = n + 1;
      for (int x : prefix) {
        if (x > run_min) top = std::min(top, x);
        run_min = std::min(run_min, x);
      }
      return all & low_value_bits(top);
    }
    case 213: {
      // "3" role again; the obstruction is the first element of a descent
      int top = n + 1;
      int run_min = n + 1;
      for (int i = k - 1; i >= 0; --i) {
        const int x = prefix[static_cast<std::size_t>(i)];
        if (run_min < x) top = std::min(top, x);
        run_min = std::min(run_min, x);
      }
      return all & low_value_bits(top);
    }
    case 231: {
      // v is the "1": forbidden below any ascent bottom
      int bottom = 0;
      int run_max = 0;
      for (int i = k - 1; i >= 0; --i) {
        const int x = prefix[static_cast<std::size_t>(i)];
        if (run_max > x) bottom = std::max(bottom, x);
        run_max = std::max(run_max, x);
      }
      return all & ~low_value_bits(bottom);
    }
    case 321: {
      // v is the "1": forbidden below any descent bottom
      int bottom = 0;
      int run_max = 0;
      for (int x : prefix) {
        if (x < run_max) bottom = std::max(bottom, x);
        run_max = std::max(run_max, x);
      }
      return all & ~low_value_bits(bottom);
    }
    case 132: {
      // v is the "2": forbidden strictly between an earlier minimum and a
      // later larger entry
      std::uint64_t forbidden = 0;
      int run_min = n + 1;
      for (int x : prefix) {
        if (run_min < x) forbidden |= value_range_bits(run_min + 1, x - 1);
        run_min = std::min(run_min, x);
      }
      return all & ~forbidden;
    }
    case 312: {
      // v is the "2": forbidden strictly between a later smaller entry and an
      // earlier maximum
      std::uint64_t forbidden = 0;
      int run_max = 0;
      for (int x : prefix) {
        if (run_max > x) forbidden |= value_range_bits(x + 1, run_max - 1);
        run_max = std::max(run_max, x);
      }
      return all & ~forbidden;
    }
    default:
      throw std::invalid_argument("avoider enumeration: unsupported pattern " + ulis::to_string(q));
  }
}

template <typename Visit>
void avoider_rec(std::vector<int>& prefix, std::uint64_t used, int n, const Permutation& q,
                 Visit&& visit) {
  if (static_cast<int>(prefix.size()) == n) {
    visit(Permutation::trusted(prefix));
    return;
  }
  std::uint64_t candidates = allowed_extension_bits(prefix, n, q) & ~used;
  while (candidates) {
    const int v = std::countr_zero(candidates) + 1;
    const std::uint64_t bit = candidates & (-candidates);
    candidates ^= bit;
    prefix.push_back(v);
    avoider_rec(prefix, used | bit, n, q, visit);
    prefix.pop_back();
  }
}

inline void check_avoider_args(const Permutation& q, int n, int ceiling) {
  if (q.size() != 3) {
    throw std::invalid_argument("avoider enumeration: pattern must have length 3");
  }
  if (n < 0) throw std::invalid_argument("avoider enumeration: negative length");
  if (ceiling > kAvoiderLengthLimit) ceiling = kAvoiderLengthLimit;
  if (n > ceiling) {
    throw std::invalid_argument(
        "avoider enumeration: n=" + std::to_string(n) + " exceeds the ceiling " +
        std::to_string(ceiling) +
        "; the stream holds Catalan(n) objects, raise the ceiling explicitly to accept the cost");
  }
}

}  // namespace detail

/// Streams every q-avoiding permutation of length n exactly once, in
/// lexicographic order of one-line notation. The total emitted is the
/// Catalan number C_n for every length-3 pattern q.
template <typename Visit>
void for_each_avoider(const Permutation& q, int n, Visit&& visit, int ceiling = kAvoiderCeiling) {
  detail::check_avoider_args(q, n, ceiling);
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  detail::avoider_rec(prefix, 0, n, q, visit);
}

/// Counts the q-avoiders of length n satisfying `keep`. Work splits by the
/// value in the first position, so the result is identical for every thread
/// count; `keep` must be pure.
template <typename Keep>
Integer count_avoiders_where(const Permutation& q, int n, Keep&& keep, int threads = 1,
                             int ceiling = kAvoiderCeiling) {
  detail::check_avoider_args(q, n, ceiling);
  if (n == 0) {
    return keep(Permutation{}) ? 1 : 0;
  }
  std::vector<std::uint64_t> by_first(static_cast<std::size_t>(n) + 1, 0);
  const auto run_first = [&](int first) {
    std::uint64_t local = 0;
    std::vector<int> prefix{first};
    prefix.reserve(static_cast<std::size_t>(n));
    detail::avoider_rec(prefix, 1ull << (first - 1), n, q, [&](const Permutation& p) {
      if (keep(p)) ++local;
    });
    by_first[static_cast<std::size_t>(first)] = local;
  };
  if (threads <= 1) {
    for (int first = 1; first <= n; ++first) run_first(first);
  } else {
    std::atomic<int> next{1};
    std::vector<std::thread> pool;
    const int workers = std::min(threads, n);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int first = next.fetch_add(1); first <= n; first = next.fetch_add(1)) {
          run_first(first);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  Integer total = 0;
  for (int first = 1; first <= n; ++first) total += by_first[static_cast<std::size_t>(first)];
  return total;
}

/// C_n, counted by actually walking the generation tree.
inline Integer count_avoiders(const Permutation& q, int n, int threads = 1,
                              int ceiling = kAvoiderCeiling) {
  return count_avoiders_where(q, n, [](const Permutation&) { return true; }, threads, ceiling);
}

/// u_n(q): q-avoiders of length n with a unique longest increasing
/// subsequence.
inline Integer count_ulis_avoiders(const Permutation& q, int n, int threads = 1,
                                   int ceiling = kAvoiderCeiling) {
  return count_avoiders_where(q, n, [](const Permutation& p) { return has_ulis(p); }, threads,
                              ceiling);
}

/// i_n(q): q-avoiding involutions of length n with a unique longest
/// increasing subsequence. Filters the avoider stream; a direct involution
/// generator would have to agree with this count.
inline Integer count_ulis_involutions(const Permutation& q, int n, int threads = 1,
                                      int ceiling = kAvoiderCeiling) {
  return count_avoiders_where(
      q, n, [](const Permutation& p) { return is_involution(p) && has_ulis(p); }, threads,
      ceiling);
}

/// All q-avoiding involutions of length n.
inline Integer count_involution_avoiders(const Permutation& q, int n, int threads = 1,
                                         int ceiling = kAvoiderCeiling) {
  return count_avoiders_where(q, n, [](const Permutation& p) { return is_involution(p); },
                              threads, ceiling);
}

/// B_n: length-n U/D sequences whose every nonempty prefix and suffix has
/// strictly more U than D steps. Exhaustive over all 2^n words.
inline Integer count_bidirectional_ballot(int n) {
  if (n < 1 || n > 24) {
    throw std::invalid_argument(
        "count_bidirectional_ballot: n must be in 1..24 (exhaustive guard); use the pruned "
        "walk beyond that");
  }
  std::uint64_t count = 0;
  const std::uint32_t words = 1u << n;
  for (std::uint32_t w = 0; w < words; ++w) {
    int balance = 0;
    int max_proper_prefix = 0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (balance > max_proper_prefix) max_proper_prefix = balance;
      balance += (w >> i) & 1 ? 1 : -1;
      if (balance < 1) {
        ok = false;
        break;
      }
    }
    if (ok && balance >= 1 + max_proper_prefix) ++count;
  }
  return count;
}

/// B_n by a prefix-pruned walk: only prefixes keeping strictly more U than D
/// are extended, and branches that can no longer beat the running prefix
/// maximum by the end are cut. Agrees with the exhaustive counter on the
/// shared range and extends it.
inline Integer count_bidirectional_ballot_pruned(int n) {
  if (n < 1 || n > 28) {
    throw std::invalid_argument("count_bidirectional_ballot_pruned: n must be in 1..28");
  }
  std::uint64_t count = 0;
  const auto rec = [&](auto&& self, int depth, int balance, int max_proper_prefix) -> void {
    if (depth == n) {
      if (balance >= 1 + max_proper_prefix) ++count;
      return;
    }
    const int next_max = std::max(max_proper_prefix, balance);
    const int remaining = n - depth;
    // even taking U every remaining step must reach 1 + next_max
    if (balance + remaining < 1 + next_max) return;
    self(self, depth + 1, balance + 1, next_max);
    if (balance >= 2) self(self, depth + 1, balance - 1, next_max);
  };
  rec(rec, 0, 0, 0);
  return count;
}

}  // namespace ulis
