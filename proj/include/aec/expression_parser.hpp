#pragma once

#include "aec/expr_tree.hpp"
#include "aec/value.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace aec {

struct ParsedExpression {
  ExprTree tree;
  /// Leaf values in left-to-right order; leaf i of `tree` is values[i].
  std::vector<Value> values;
};

/// Infix parser: binary + - * /, parentheses, integer and identifier
/// leaves (`x`, `x^3`), and bracketed value literals (`[2*x*y]`) as single
/// leaves. * and / bind tighter than + and -; all operators associate left.
/// Leaves share one domain: the function domain if any leaf has a variable
/// (or `domain` says so). Throws ParseError with the byte offset.
ParsedExpression parse_expression(std::string_view text, std::optional<Domain> domain = std::nullopt);

}  // namespace aec
