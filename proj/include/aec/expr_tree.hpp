#pragma once

#include "aec/ops.hpp"
#include "aec/value.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace aec {

/// Immutable binary expression tree. Leaves hold indices into an
/// instance's value list; internal nodes hold an operator. For - and /
/// the left child is the first operand.
class ExprTree {
 public:
  static ExprTree leaf(std::size_t index);
  static ExprTree node(Op op, ExprTree left, ExprTree right);

  bool is_leaf() const;
  std::size_t leaf_index() const;
  Op op() const;
  const ExprTree& left() const;
  const ExprTree& right() const;

  std::size_t leaf_count() const;
  /// Leaf indices in left-to-right order.
  std::vector<std::size_t> leaf_indices() const;
  /// True when the leaves are exactly 0..n-1, each once.
  bool uses_each_index_once(std::size_t n) const;

  friend bool operator==(const ExprTree& a, const ExprTree& b);

 private:
  struct Node;
  explicit ExprTree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct ExprTree::Node {
  Op op = Op::Add;
  std::size_t leaf = 0;
  bool is_leaf = true;
  std::size_t leaves = 1;
  ExprTree left{nullptr};
  ExprTree right{nullptr};
};

/// Post-order exact evaluation. Throws DivisionByZero, or InvalidInstance
/// when the leaves do not use each value exactly once.
Value eval_tree(const ExprTree& tree, std::span<const Value> values);

/// Leaf text: bare when the literal is a single token, otherwise wrapped in [..].
std::string leaf_literal(const Value& v);

/// Fully parenthesized infix, e.g. "((11*9)-(4/(3+1)))".
std::string print_full_paren(const ExprTree& tree, std::span<const Value> values);

}  // namespace aec
