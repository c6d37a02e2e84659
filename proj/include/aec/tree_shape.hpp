#pragma once

#include "aec/expr_tree.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace aec {

/// Unlabeled full binary tree. code() is an AHU-style canonical string in
/// which sibling codes are sorted (by leaf count, then text), so two shapes
/// are isomorphic as unordered trees iff their codes match.
class TreeShape {
 public:
  static TreeShape leaf();
  static TreeShape pair(TreeShape first, TreeShape second);
  /// Left comb (((..)..)..) with `leaves` leaves; leaves >= 1.
  static TreeShape left_comb(std::size_t leaves);
  /// Root joining two left combs; both sizes must be >= 1.
  static TreeShape comb_pair(std::size_t left, std::size_t right);

  bool is_leaf() const { return !first_; }
  const TreeShape& first() const { return *first_; }
  const TreeShape& second() const { return *second_; }
  std::size_t leaf_count() const { return leaves_; }
  const std::string& code() const { return code_; }
  /// Code that keeps child order (for ordered isomorphism).
  const std::string& ordered_code() const { return ordered_code_; }

  /// All ordered shapes with n leaves (Catalan(n-1) of them).
  static std::vector<TreeShape> all_ordered(std::size_t n);
  /// One representative per unordered isomorphism class, sorted by code.
  static std::vector<TreeShape> all_unordered(std::size_t n);

 private:
  TreeShape() = default;
  std::shared_ptr<const TreeShape> first_;
  std::shared_ptr<const TreeShape> second_;
  std::size_t leaves_ = 1;
  std::string code_ = "L";
  std::string ordered_code_ = "L";
};

TreeShape shape_of(const ExprTree& tree);
bool isomorphic(const TreeShape& a, const TreeShape& b, bool ordered = false);

}  // namespace aec
