#pragma once

#include "aec/ops.hpp"
#include "aec/tree_shape.hpp"
#include "aec/value.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aec {

enum class Variant { Std, EP, NP };

std::string to_string(Variant v);
/// "std", "ep" or "np".
Variant parse_variant(std::string_view text);

struct Instance {
  std::vector<Value> values;
  Value target;
  OpSet ops;
  Variant variant = Variant::Std;
  /// Required for EP, ignored otherwise.
  std::optional<TreeShape> shape;
  std::string provenance;

  Domain domain() const { return target.domain(); }
  /// Throws EmptyInstance, MixedDomain, LeafCountMismatch or InvalidInstance.
  void validate() const;
};

/// Independent check of a witness string: parses it, matches its leaves to
/// the instance values as a multiset, evaluates it, and enforces the
/// variant's structural rule (shape for EP, no parentheses for NP).
bool check_witness(const Instance& inst, std::string_view witness, bool ordered = false);

}  // namespace aec
