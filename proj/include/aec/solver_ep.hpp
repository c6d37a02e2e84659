#pragma once

#include "aec/expr_tree.hpp"
#include "aec/instance.hpp"
#include "aec/solver.hpp"
#include "aec/tree_shape.hpp"

#include <optional>

namespace aec {

struct EpResult {
  std::optional<ExprTree> witness;
  SolveStats stats;
};

/// Decides the enforced-parenthesis variant: the witness tree must be
/// isomorphic to inst.shape (unordered unless options.ordered_shapes).
/// Throws EmptyInstance, LeafCountMismatch, MixedDomain or BoundExceeded.
EpResult solve_ep(const Instance& inst, const SolverOptions& options = {});

/// Enforced parenthesization for the op sets with an explicit two-comb
/// construction ({/}, {+,-}, {*,/}): a root over left combs of
/// ceil(n/2) and floor(n/2) leaves. Throws InvalidShape for n < 2 and
/// UnsupportedSpec for other op sets.
TreeShape shape_catalog(OpSet ops, std::size_t n);

}  // namespace aec
