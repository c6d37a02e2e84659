#pragma once

#include <cstddef>
#include <cstdint>

namespace aec {

struct SolverOptions {
  /// Largest instance the exponential std/ep searches accept.
  std::size_t max_values = 12;
  /// Largest instance the no-parenthesis search accepts.
  std::size_t max_values_np = 18;
  /// Worker threads; 0 means one per core. Results never depend on it.
  unsigned threads = 1;
  /// Also evaluate r op l for commutative ops (test hook; same value sets).
  bool commuted_branches = false;
  /// EP only: require ordered instead of unordered isomorphism.
  bool ordered_shapes = false;
};

/// Work counters. Deterministic for a given instance and options.
struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_entries = 0;
};

}  // namespace aec
