#include "aec/oracle.hpp"

#include "aec/errors.hpp"

#include <algorithm>
#include <numeric>

namespace aec {

namespace {

void check_bound(std::size_t n) {
  if (n == 0) throw EmptyInstance();
  if (n > kOracleMaxValues) {
    throw BoundExceeded("oracle enumeration is limited to " + std::to_string(kOracleMaxValues) + " values");
  }
}

/// Fills `shape` with leaves perm[pos..] and ops labels[next..] in pre-order.
ExprTree fill(const TreeShape& shape, const std::vector<std::size_t>& perm, std::size_t& pos,
              const std::vector<Op>& labels, std::size_t& next) {
  if (shape.is_leaf()) return ExprTree::leaf(perm[pos++]);
  Op op = labels[next++];
  ExprTree l = fill(shape.first(), perm, pos, labels, next);
  ExprTree r = fill(shape.second(), perm, pos, labels, next);
  return ExprTree::node(op, std::move(l), std::move(r));
}

/// Calls fn(labels) for each of |ops|^k labelings.
template <class Fn>
void for_each_labeling(const std::vector<Op>& ops, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> digit(k, 0);
  std::vector<Op> labels(k, ops[0]);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) labels[i] = ops[digit[i]];
    fn(labels);
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++digit[i] < ops.size()) break;
      digit[i] = 0;
    }
    if (i == k) return;
  }
}

OracleCount enumerate_trees(std::span<const Value> values, OpSet ops, const TreeShape* filter, bool ordered,
                            const TreeSink& sink) {
  const std::size_t n = values.size();
  check_bound(n);
  std::vector<Op> op_list = ops.ops();
  OracleCount count;
  for (const TreeShape& shape : TreeShape::all_ordered(n)) {
    if (filter && !isomorphic(shape, *filter, ordered)) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for_each_labeling(op_list, n - 1, [&](const std::vector<Op>& labels) {
        std::size_t pos = 0, next = 0;
        ExprTree tree = fill(shape, perm, pos, labels, next);
        std::optional<Value> v;
        try {
          v = eval_tree(tree, values);
        } catch (const DivisionByZero&) {
          ++count.skipped;
          return;
        }
        ++count.streamed;
        sink(tree, *v);
      });
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return count;
}

}  // namespace

OracleCount enumerate_std(std::span<const Value> values, OpSet ops, const TreeSink& sink) {
  return enumerate_trees(values, ops, nullptr, false, sink);
}

OracleCount enumerate_ep(std::span<const Value> values, OpSet ops, const TreeShape& shape, const TreeSink& sink,
                         bool ordered) {
  if (shape.leaf_count() != values.size()) throw LeafCountMismatch(shape.leaf_count(), values.size());
  return enumerate_trees(values, ops, &shape, ordered, sink);
}

OracleCount enumerate_np(std::span<const Value> values, OpSet ops, const FlatSink& sink) {
  const std::size_t n = values.size();
  check_bound(n);
  std::vector<Op> op_list = ops.ops();
  OracleCount count;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::size_t k = n - 1;
    if (k == 0) {
      FlatExpr e;
      e.groups.push_back({Sign::Plus, Group{perm[0], {}}});
      ++count.streamed;
      sink(e, values[perm[0]]);
      continue;
    }
    for_each_labeling(op_list, k, [&](const std::vector<Op>& labels) {
      FlatExpr e;
      e.groups.push_back({Sign::Plus, Group{perm[0], {}}});
      for (std::size_t i = 0; i < k; ++i) {
        Op op = labels[i];
        std::size_t idx = perm[i + 1];
        if (is_additive(op)) {
          e.groups.push_back({op == Op::Add ? Sign::Plus : Sign::Minus, Group{idx, {}}});
        } else {
          e.groups.back().group.tail.emplace_back(op, idx);
        }
      }
      // Two passes: fold each * / run, then add up the signed runs.
      std::optional<Value> total;
      try {
        for (const SignedGroup& g : e.groups) {
          Value run = values[g.group.lead];
          for (auto [op, idx] : g.group.tail) run = op == Op::Mul ? run * values[idx] : run / values[idx];
          if (!total) {
            total = run;
          } else {
            total = g.sign == Sign::Plus ? *total + run : *total - run;
          }
        }
      } catch (const DivisionByZero&) {
        ++count.skipped;
        return;
      }
      ++count.streamed;
      sink(e, *total);
    });
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace aec
