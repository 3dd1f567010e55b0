#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ulis/dyck.hpp"
#include "ulis/plane_tree.hpp"

namespace ulis {

/// Pinned pseudorandom source. The engine is std::mt19937_64 (its output
/// sequence is fixed by the standard) and bounded draws use plain rejection
/// sampling, so a seed reproduces the identical sample on every platform and
/// build. Never route draws through std::uniform_int_distribution, whose
/// algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = engine_();
    while (x < reject_below) x = engine_();
    return x % bound;
  }

  /// Seed for worker substream w: the (w+1)-th output of a splitmix64 stream
  /// seeded with `seed`. Substreams are what parallel sampling runs on.
  static std::uint64_t substream_seed(std::uint64_t seed, int worker) {
    std::uint64_t state = seed;
    std::uint64_t out = 0;
    for (int i = 0; i <= worker; ++i) {
      state += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      out = z ^ (z >> 31);
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform random Dyck path of the given semilength by the cycle lemma: a
/// uniformly shuffled word of n U steps and n+1 D steps has exactly one
/// rotation of the form (Dyck word)·D, namely the one starting right after
/// the first position where the prefix sum attains its minimum. Every Dyck
/// path is hit by exactly 2n+1 of the equally likely words, so the result is
/// exactly uniform; cost is O(n) per sample.
inline DyckPath sample_dyck_path(int semilength, Rng& rng) {
  if (semilength < 0) throw std::invalid_argument("sample_dyck_path: negative semilength");
  const int len = 2 * semilength + 1;
  std::vector<signed char> word(static_cast<std::size_t>(len), -1);
  for (int i = 0; i < semilength; ++i) word[static_cast<std::size_t>(i)] = 1;
  for (int i = len - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(word[static_cast<std::size_t>(i)], word[static_cast<std::size_t>(j)]);
  }
  int sum = 0;
  int min_sum = 1;  // any prefix sum is <= 0 at the end, so this updates
  int min_pos = 0;  // first 1-based prefix length attaining the minimum
  for (int k = 1; k <= len; ++k) {
    sum += word[static_cast<std::size_t>(k - 1)];
    if (sum < min_sum) {
      min_sum = sum;
      min_pos = k;
    }
  }
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * semilength));
  for (int t = 0; t < len - 1; ++t) {
    const int idx = (min_pos + t) % len;
    steps.push_back(word[static_cast<std::size_t>(idx)] == 1 ? Step::U : Step::D);
  }
  return DyckPath(std::move(steps));
}

/// Monte Carlo estimate of the distribution of the number of deepest leaves
/// of a uniform plane tree on n vertices. Counts partition the trials
/// exactly: k = 1..k_max each get a bucket and larger k fall into overflow.
struct SampleReport {
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  int k_max = 8;
  int workers = 1;
  std::vector<std::int64_t> counts;        // counts[k-1] for k = 1..k_max
  std::int64_t overflow = 0;               // trees with more than k_max deepest leaves
  std::vector<std::int64_t> worker_trials; // substream layout, worker order

  double estimate(int k) const { return static_cast<double>(counts.at(static_cast<std::size_t>(k - 1))) / static_cast<double>(trials); }

  double standard_error(int k) const {
    const double p = estimate(k);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  }

  double overflow_estimate() const { return static_cast<double>(overflow) / static_cast<double>(trials); }
};

/// Samples `trials` uniform plane trees on n vertices (via uniform Dyck
/// paths of semilength n-1) and tallies the number of leaves at maximum
/// depth. Single-stream runs (workers = 1) draw everything from Rng(seed)
/// and are the byte-reproducibility contract; workers > 1 splits the trials
/// over per-worker substreams and merges counts in worker order, so a given
/// (seed, workers) pair is deterministic regardless of scheduling.
inline SampleReport estimate_ank(int n, int k_max, std::int64_t trials, std::uint64_t seed,
                                 int workers = 1) {
  if (n < 1) throw std::invalid_argument("estimate_ank: need n >= 1 vertices");
  if (k_max < 1) throw std::invalid_argument("estimate_ank: need k_max >= 1");
  if (trials < 1) throw std::invalid_argument("estimate_ank: need trials >= 1");
  if (workers < 1) throw std::invalid_argument("estimate_ank: need workers >= 1");

  SampleReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.k_max = k_max;
  report.workers = workers;
  report.counts.assign(static_cast<std::size_t>(k_max), 0);

  const auto run_stream = [&](std::uint64_t stream_seed, std::int64_t stream_trials,
                              std::vector<std::int64_t>& counts, std::int64_t& overflow) {
    Rng rng(stream_seed);
    for (std::int64_t t = 0; t < stream_trials; ++t) {
      const DyckPath path = sample_dyck_path(n - 1, rng);
      const PlaneTree tree = dyck_to_tree(path);
      const int k = max_depth_leaf_count(tree).second;
      if (k <= k_max) {
        ++counts[static_cast<std::size_t>(k - 1)];
      } else {
        ++overflow;
      }
    }
  };

  if (workers == 1) {
    report.worker_trials = {trials};
    run_stream(seed, trials, report.counts, report.overflow);
    return report;
  }

  std::vector<std::int64_t> share(static_cast<std::size_t>(workers), trials / workers);
  for (int w = 0; w < static_cast<int>(trials % workers); ++w) ++share[static_cast<std::size_t>(w)];
  report.worker_trials = share;

  std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(workers),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(k_max), 0));
  std::vector<std::int64_t> overflow(static_cast<std::size_t>(workers), 0);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      run_stream(Rng::substream_seed(seed, w), share[static_cast<std::size_t>(w)],
                 counts[static_cast<std::size_t>(w)], overflow[static_cast<std::size_t>(w)]);
    });
  }
  for (auto& th : pool) th.join();
  for (int w = 0; w < workers; ++w) {
    for (int k = 0; k < k_max; ++k) report.counts[static_cast<std::size_t>(k)] += counts[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)];
    report.overflow += overflow[static_cast<std::size_t>(w)];
  }
  return report;
}

}  // namespace ulis
