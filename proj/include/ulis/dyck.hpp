#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulis {

enum class Step : std::uint8_t { U, D };

/// Lattice path of U=(1,1) and D=(1,-1) steps from the origin back to the
/// x-axis, never dipping below it. Construction validates both conditions.
class DyckPath {
 public:
  DyckPath() = default;

  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int height = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      height += steps_[i] == Step::U ? 1 : -1;
      if (height < 0) {
        throw std::invalid_argument("not a Dyck path: prefix of length " +
                                    std::to_string(i + 1) + " dips below the axis");
      }
    }
    if (height != 0) {
      throw std::invalid_argument("not a Dyck path: ends at height " + std::to_string(height));
    }
  }

  /// Parses a word over {U,D}, e.g. "UUDD"; "" is the empty path.
  static DyckPath parse(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == 'U')
        steps.push_back(Step::U);
      else if (text[i] == 'D')
        steps.push_back(Step::D);
      else
        throw std::invalid_argument("not a Dyck path: unexpected character '" +
                                    std::string(1, text[i]) + "' at position " +
                                    std::to_string(i + 1));
    }
    return DyckPath(std::move(steps));
  }

  int length() const { return static_cast<int>(steps_.size()); }
  int semilength() const { return length() / 2; }
  const std::vector<Step>& steps() const { return steps_; }

  std::string to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s += st == Step::U ? 'U' : 'D';
    return s;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// A peak is a point preceded by U and followed by D; `position` is its
/// x-coordinate, `height` its y-coordinate.
struct Peak {
  int position = 0;
  int height = 0;
  friend bool operator==(const Peak&, const Peak&) = default;
};

inline std::vector<Peak> peaks(const DyckPath& d) {
  std::vector<Peak> out;
  const auto& s = d.steps();
  int height = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    height += s[i] == Step::U ? 1 : -1;
    if (i + 1 < s.size() && s[i] == Step::U && s[i + 1] == Step::D) {
      out.push_back(Peak{static_cast<int>(i + 1), height});
    }
  }
  return out;
}

/// The common height when exactly one peak attains the maximum peak height;
/// empty when the maximum is attained more than once or the path is empty.
inline std::optional<int> unique_max_peak(const DyckPath& d) {
  int best = 0;
  int count = 0;
  for (const Peak& pk : peaks(d)) {
    if (pk.height > best) {
      best = pk.height;
      count = 1;
    } else if (pk.height == best) {
      ++count;
    }
  }
  if (count == 1) return best;
  return std::nullopt;
}

/// True iff the step word reversed with U and D exchanged equals itself,
/// i.e. the path is mirror-symmetric about its midpoint.
inline bool is_symmetric(const DyckPath& d) {
  const auto& s = d.steps();
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m / 2 + 1 && i < m; ++i) {
    const Step mirrored = s[m - 1 - i] == Step::U ? Step::D : Step::U;
    if (s[i] != mirrored) return false;
  }
  return true;
}

/// Every nonempty prefix and every nonempty suffix has strictly more U than D.
inline bool is_bidirectional_ballot(const std::vector<Step>& steps) {
  const int n = static_cast<int>(steps.size());
  if (n == 0) return false;
  int balance = 0;
  int max_proper_prefix = 0;  // max prefix balance over lengths 0..n-1
  for (int i = 0; i < n; ++i) {
    max_proper_prefix = std::max(max_proper_prefix, balance);
    balance += steps[static_cast<std::size_t>(i)] == Step::U ? 1 : -1;
    if (balance < 1) return false;
  }
  // suffix starting after position k has balance total - prefix_k >= 1
  return balance >= 1 + max_proper_prefix;
}

/// Visits every Dyck path of the given semilength once, in lexicographic
/// order of the step word with U < D.
template <typename Visit>
void for_each_dyck_path(int semilength, Visit&& visit) {
  if (semilength < 0) throw std::invalid_argument("for_each_dyck_path: negative semilength");
  std::vector<Step> steps(static_cast<std::size_t>(2 * semilength), Step::U);
  const auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups + downs == 2 * semilength) {
      visit(DyckPath(steps));
      return;
    }
    const std::size_t i = static_cast<std::size_t>(ups + downs);
    if (ups < semilength) {
      steps[i] = Step::U;
      self(self, ups + 1, downs);
    }
    if (downs < ups) {
      steps[i] = Step::D;
      self(self, ups, downs + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace ulis
