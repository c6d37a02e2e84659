#pragma once

#include "aec/expr_tree.hpp"
#include "aec/ops.hpp"
#include "aec/value.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aec {

enum class Sign { Plus, Minus };

/// One * / run: lead, then left-to-right application of the tail ops.
/// Its value is prod(lead, * operands) / prod(/ operands).
struct Group {
  std::size_t lead = 0;
  std::vector<std::pair<Op, std::size_t>> tail;

  std::vector<std::size_t> indices() const;
  friend bool operator==(const Group&, const Group&) = default;
};

struct SignedGroup {
  Sign sign = Sign::Plus;
  Group group;
  friend bool operator==(const SignedGroup&, const SignedGroup&) = default;
};

/// Expression without parentheses: a signed sum of groups. The first sign
/// is always +.
struct FlatExpr {
  std::vector<SignedGroup> groups;

  std::size_t plus_count() const;
  std::size_t minus_count() const;
  friend bool operator==(const FlatExpr&, const FlatExpr&) = default;
};

Value eval_group(const Group& g, std::span<const Value> values);
/// Throws DivisionByZero.
Value eval_flat(const FlatExpr& e, std::span<const Value> values);

/// Checks the structural invariants against `n` values and `ops`; throws
/// InvalidInstance describing the first violation.
void validate_flat(const FlatExpr& e, std::size_t n, OpSet ops);

/// No-parenthesis text such as "2*4/2/4" or "[2*x*y]/y+[2*x]/1".
std::string print_flat(const FlatExpr& e, std::span<const Value> values);

/// Precedence-respecting binary tree with the same value.
ExprTree to_tree(const FlatExpr& e);

}  // namespace aec
