#include "aec/expr_tree.hpp"

#include "aec/errors.hpp"

#include <algorithm>

namespace aec {

ExprTree ExprTree::leaf(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->leaf = index;
  return ExprTree(std::move(n));
}

ExprTree ExprTree::node(Op op, ExprTree left, ExprTree right) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->is_leaf = false;
  n->leaves = left.leaf_count() + right.leaf_count();
  n->left = std::move(left);
  n->right = std::move(right);
  return ExprTree(std::move(n));
}

bool ExprTree::is_leaf() const { return n_->is_leaf; }
std::size_t ExprTree::leaf_index() const { return n_->leaf; }
Op ExprTree::op() const { return n_->op; }
const ExprTree& ExprTree::left() const { return n_->left; }
const ExprTree& ExprTree::right() const { return n_->right; }
std::size_t ExprTree::leaf_count() const { return n_->leaves; }

namespace {

void collect(const ExprTree& t, std::vector<std::size_t>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf_index());
    return;
  }
  collect(t.left(), out);
  collect(t.right(), out);
}

}  // namespace

std::vector<std::size_t> ExprTree::leaf_indices() const {
  std::vector<std::size_t> out;
  collect(*this, out);
  return out;
}

bool ExprTree::uses_each_index_once(std::size_t n) const {
  auto idx = leaf_indices();
  if (idx.size() != n) return false;
  std::sort(idx.begin(), idx.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (idx[i] != i) return false;
  }
  return true;
}

bool operator==(const ExprTree& a, const ExprTree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.leaf_index() == b.leaf_index();
  return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
}

namespace {

Value eval_node(const ExprTree& t, std::span<const Value> values) {
  if (t.is_leaf()) return values[t.leaf_index()];
  return apply(t.op(), eval_node(t.left(), values), eval_node(t.right(), values));
}

}  // namespace

Value eval_tree(const ExprTree& tree, std::span<const Value> values) {
  if (!tree.uses_each_index_once(values.size())) {
    throw InvalidInstance("expression tree must use each of the " + std::to_string(values.size()) +
                          " values exactly once");
  }
  return eval_node(tree, values);
}

std::string leaf_literal(const Value& v) {
  return v.is_atomic_literal() ? v.to_string() : "[" + v.to_string() + "]";
}

std::string print_full_paren(const ExprTree& tree, std::span<const Value> values) {
  if (tree.is_leaf()) return leaf_literal(values[tree.leaf_index()]);
  return "(" + print_full_paren(tree.left(), values) + symbol(tree.op()) +
         print_full_paren(tree.right(), values) + ")";
}

}  // namespace aec
