#pragma once

#include "aec/expr_tree.hpp"
#include "aec/flat_expr.hpp"
#include "aec/ops.hpp"
#include "aec/tree_shape.hpp"
#include "aec/value.hpp"

#include <cstdint>
#include <functional>
#include <span>

namespace aec {

/// Naive exhaustive enumerators. No memoization and no deduplication: every
/// candidate expression is built and evaluated from scratch.

inline constexpr std::size_t kOracleMaxValues = 6;

struct OracleCount {
  std::uint64_t streamed = 0;
  std::uint64_t skipped = 0;  // division by zero
};

using TreeSink = std::function<void(const ExprTree&, const Value&)>;
using FlatSink = std::function<void(const FlatExpr&, const Value&)>;

/// Every ordered shape x every leaf permutation x every op labeling.
/// Throws BoundExceeded above kOracleMaxValues values.
OracleCount enumerate_std(std::span<const Value> values, OpSet ops, const TreeSink& sink);

/// Every leaf permutation x every op between neighbours, evaluated with
/// * and / binding tighter than + and -.
OracleCount enumerate_np(std::span<const Value> values, OpSet ops, const FlatSink& sink);

/// enumerate_std restricted to trees isomorphic to `shape`.
OracleCount enumerate_ep(std::span<const Value> values, OpSet ops, const TreeShape& shape, const TreeSink& sink,
                         bool ordered = false);

}  // namespace aec
