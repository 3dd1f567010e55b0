#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ulis/dyck.hpp"

namespace ulis {

/// Rooted ordered unlabeled tree. Height and depth are measured in edges, so
/// the single-vertex tree has height 0 and one leaf at maximum distance.
struct PlaneTree {
  std::vector<PlaneTree> children;

  bool operator==(const PlaneTree&) const = default;

  int size() const {
    int s = 1;
    for (const PlaneTree& c : children) s += c.size();
    return s;
  }

  int height() const {
    int h = 0;
    for (const PlaneTree& c : children) h = std::max(h, 1 + c.height());
    return h;
  }
};

/// (height, number of leaves at that depth).
inline std::pair<int, int> max_depth_leaf_count(const PlaneTree& t) {
  if (t.children.empty()) return {0, 1};
  int depth = -1;
  int count = 0;
  for (const PlaneTree& c : t.children) {
    const auto [h, k] = max_depth_leaf_count(c);
    if (h + 1 > depth) {
      depth = h + 1;
      count = k;
    } else if (h + 1 == depth) {
      count += k;
    }
  }
  return {depth, count};
}

/// Balanced-parentheses serialization: each vertex prints "(" children ")",
/// so the single vertex is "()".
inline std::string to_parentheses(const PlaneTree& t) {
  std::string out = "(";
  for (const PlaneTree& c : t.children) out += to_parentheses(c);
  out += ')';
  return out;
}

namespace detail {

inline PlaneTree parse_tree_at(const std::string& s, std::size_t& i) {
  if (i >= s.size() || s[i] != '(') {
    throw std::invalid_argument("not a tree: expected '(' at position " + std::to_string(i + 1));
  }
  ++i;
  PlaneTree t;
  while (i < s.size() && s[i] == '(') t.children.push_back(parse_tree_at(s, i));
  if (i >= s.size() || s[i] != ')') {
    throw std::invalid_argument("not a tree: expected ')' at position " + std::to_string(i + 1));
  }
  ++i;
  return t;
}

}  // namespace detail

inline PlaneTree tree_from_parentheses(const std::string& s) {
  std::size_t i = 0;
  PlaneTree t = detail::parse_tree_at(s, i);
  if (i != s.size()) {
    throw std::invalid_argument("not a tree: trailing characters after position " +
                                std::to_string(i));
  }
  return t;
}

namespace detail {

inline PlaneTree tree_from_steps(const std::vector<Step>& s, std::size_t& i) {
  PlaneTree t;
  while (i < s.size() && s[i] == Step::U) {
    ++i;  // descend
    t.children.push_back(tree_from_steps(s, i));
    ++i;  // the matching D
  }
  return t;
}

}  // namespace detail

/// The standard glue between Dyck paths of semilength n and plane trees on
/// n+1 vertices: U descends into a new child, D returns to the parent.
inline PlaneTree dyck_to_tree(const DyckPath& d) {
  std::size_t i = 0;
  return detail::tree_from_steps(d.steps(), i);
}

inline DyckPath tree_to_dyck(const PlaneTree& t) {
  std::vector<Step> steps;
  const auto emit = [&](auto&& self, const PlaneTree& node) -> void {
    for (const PlaneTree& c : node.children) {
      steps.push_back(Step::U);
      self(self, c);
      steps.push_back(Step::D);
    }
  };
  emit(emit, t);
  return DyckPath(std::move(steps));
}

}  // namespace ulis
