#include "aec/tree_shape.hpp"

#include "aec/errors.hpp"

#include <algorithm>
#include <map>

namespace aec {

TreeShape TreeShape::leaf() { return TreeShape(); }

TreeShape TreeShape::pair(TreeShape first, TreeShape second) {
  TreeShape s;
  s.leaves_ = first.leaves_ + second.leaves_;
  s.ordered_code_ = "(" + first.ordered_code_ + second.ordered_code_ + ")";
  bool swap = second.leaves_ < first.leaves_ ||
              (second.leaves_ == first.leaves_ && second.code_ < first.code_);
  if (swap) {
    s.code_ = "(" + second.code_ + first.code_ + ")";
  } else {
    s.code_ = "(" + first.code_ + second.code_ + ")";
  }
  s.first_ = std::make_shared<const TreeShape>(std::move(first));
  s.second_ = std::make_shared<const TreeShape>(std::move(second));
  return s;
}

TreeShape TreeShape::left_comb(std::size_t leaves) {
  if (leaves == 0) throw InvalidShape("a comb needs at least one leaf");
  TreeShape s = leaf();
  for (std::size_t i = 1; i < leaves; ++i) s = pair(std::move(s), leaf());
  return s;
}

TreeShape TreeShape::comb_pair(std::size_t left, std::size_t right) {
  if (left == 0 || right == 0) {
    throw InvalidShape("comb sizes must be positive, got (" + std::to_string(left) + "," +
                       std::to_string(right) + ")");
  }
  return pair(left_comb(left), left_comb(right));
}

std::vector<TreeShape> TreeShape::all_ordered(std::size_t n) {
  if (n == 0) return {};
  std::vector<std::vector<TreeShape>> by_size(n + 1);
  by_size[1].push_back(leaf());
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t l = 1; l < k; ++l) {
      for (const auto& a : by_size[l]) {
        for (const auto& b : by_size[k - l]) by_size[k].push_back(pair(a, b));
      }
    }
  }
  return by_size[n];
}

std::vector<TreeShape> TreeShape::all_unordered(std::size_t n) {
  std::map<std::string, TreeShape> seen;
  for (auto& s : all_ordered(n)) seen.try_emplace(s.code(), s);
  std::vector<TreeShape> out;
  for (auto& [code, s] : seen) out.push_back(s);
  return out;
}

TreeShape shape_of(const ExprTree& tree) {
  if (tree.is_leaf()) return TreeShape::leaf();
  return TreeShape::pair(shape_of(tree.left()), shape_of(tree.right()));
}

bool isomorphic(const TreeShape& a, const TreeShape& b, bool ordered) {
  return ordered ? a.ordered_code() == b.ordered_code() : a.code() == b.code();
}

}  // namespace aec
