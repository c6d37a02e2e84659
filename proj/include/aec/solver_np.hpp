#pragma once

#include "aec/flat_expr.hpp"
#include "aec/instance.hpp"
#include "aec/solver.hpp"

#include <optional>
#include <span>
#include <vector>

namespace aec {

struct GroupCandidate {
  Value value;
  Group witness;
};

/// Every distinct value one * / run can take over exactly the values at
/// `indices`, given the multiplicative ops in `ops`. Runs that divide by
/// zero are skipped. Without * or / only single-value runs exist.
std::vector<GroupCandidate> group_values(std::span<const Value> values, std::span<const std::size_t> indices,
                                         OpSet ops);

struct NpResult {
  std::optional<FlatExpr> witness;
  SolveStats stats;
};

/// Decides the no-parenthesis variant. Throws EmptyInstance, MixedDomain
/// or BoundExceeded (more than options.max_values_np values).
NpResult solve_np(const Instance& inst, const SolverOptions& options = {});

/// Closed-form decision for a single-op no-parenthesis instance.
/// Throws InvalidInstance when inst.ops is not a singleton.
std::optional<FlatExpr> solve_single_op(const Instance& inst);

}  // namespace aec
