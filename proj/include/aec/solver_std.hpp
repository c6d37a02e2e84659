#pragma once

#include "aec/expr_tree.hpp"
#include "aec/instance.hpp"
#include "aec/solver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aec {

struct StdResult {
  std::optional<ExprTree> witness;
  SolveStats stats;
};

/// Decides the standard variant: any parenthesization over the op set.
/// Throws EmptyInstance, MixedDomain or BoundExceeded.
StdResult solve_std(const Instance& inst, const SolverOptions& options = {});

/// Every value reachable with exactly the values selected by `mask`
/// (bit i = value i), deduplicated, in discovery order.
std::vector<Value> achievable_values(const Instance& inst, std::uint32_t mask,
                                     const SolverOptions& options = {});

}  // namespace aec
