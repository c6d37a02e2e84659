#include "aec/flat_expr.hpp"

#include "aec/errors.hpp"

#include <algorithm>

namespace aec {

std::vector<std::size_t> Group::indices() const {
  std::vector<std::size_t> out{lead};
  for (const auto& [op, idx] : tail) out.push_back(idx);
  return out;
}

std::size_t FlatExpr::plus_count() const {
  return static_cast<std::size_t>(std::count_if(
      groups.begin() + (groups.empty() ? 0 : 1), groups.end(), [](const SignedGroup& g) { return g.sign == Sign::Plus; }));
}

std::size_t FlatExpr::minus_count() const {
  return static_cast<std::size_t>(
      std::count_if(groups.begin(), groups.end(), [](const SignedGroup& g) { return g.sign == Sign::Minus; }));
}

Value eval_group(const Group& g, std::span<const Value> values) {
  Value v = values[g.lead];
  for (const auto& [op, idx] : g.tail) v = apply(op, v, values[idx]);
  return v;
}

Value eval_flat(const FlatExpr& e, std::span<const Value> values) {
  if (e.groups.empty()) throw InvalidInstance("empty flat expression");
  Value sum = eval_group(e.groups.front().group, values);
  for (std::size_t i = 1; i < e.groups.size(); ++i) {
    Value g = eval_group(e.groups[i].group, values);
    sum = e.groups[i].sign == Sign::Plus ? sum + g : sum - g;
  }
  return sum;
}

void validate_flat(const FlatExpr& e, std::size_t n, OpSet ops) {
  if (e.groups.empty()) throw InvalidInstance("flat expression has no groups");
  if (e.groups.front().sign != Sign::Plus) throw InvalidInstance("first group must be positive");
  std::vector<int> used(n, 0);
  for (std::size_t i = 0; i < e.groups.size(); ++i) {
    const auto& sg = e.groups[i];
    if (i > 0) {
      Op needed = sg.sign == Sign::Plus ? Op::Add : Op::Sub;
      if (!ops.contains(needed)) throw InvalidInstance(std::string("operator ") + symbol(needed) + " not allowed");
    }
    for (const auto& [op, idx] : sg.group.tail) {
      if (op != Op::Mul && op != Op::Div) throw InvalidInstance("group tail must use * or /");
      if (!ops.contains(op)) throw InvalidInstance(std::string("operator ") + symbol(op) + " not allowed");
    }
    for (std::size_t idx : sg.group.indices()) {
      if (idx >= n) throw InvalidInstance("value index out of range");
      ++used[idx];
    }
  }
  for (int u : used) {
    if (u != 1) throw InvalidInstance("each value must be used exactly once");
  }
}

std::string print_flat(const FlatExpr& e, std::span<const Value> values) {
  std::string out;
  for (std::size_t i = 0; i < e.groups.size(); ++i) {
    const auto& sg = e.groups[i];
    if (i > 0) out += sg.sign == Sign::Plus ? '+' : '-';
    out += leaf_literal(values[sg.group.lead]);
    for (const auto& [op, idx] : sg.group.tail) {
      out += symbol(op);
      out += leaf_literal(values[idx]);
    }
  }
  return out;
}

ExprTree to_tree(const FlatExpr& e) {
  auto group_tree = [](const Group& g) {
    ExprTree t = ExprTree::leaf(g.lead);
    for (const auto& [op, idx] : g.tail) t = ExprTree::node(op, std::move(t), ExprTree::leaf(idx));
    return t;
  };
  ExprTree t = group_tree(e.groups.front().group);
  for (std::size_t i = 1; i < e.groups.size(); ++i) {
    Op op = e.groups[i].sign == Sign::Plus ? Op::Add : Op::Sub;
    t = ExprTree::node(op, std::move(t), group_tree(e.groups[i].group));
  }
  return t;
}

}  // namespace aec
