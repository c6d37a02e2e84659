#pragma once

#include "aec/expr_tree.hpp"
#include "aec/flat_expr.hpp"
#include "aec/instance.hpp"
#include "aec/source_problems.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aec {

/// One construction: a source problem mapped to instances of (ops, variant).
/// Tags "2.1".."2.9" name the no-parenthesis constructions; "ep-div",
/// "ep-plus-minus" and "ep-times-div" name the two-comb shapes. Two tags
/// ("2.6", "2.7") cover two op sets each.
struct ReductionSpec {
  std::string tag;
  OpSet ops;
  Variant variant = Variant::NP;
  SourceKind source = SourceKind::Partition;
};

const std::vector<ReductionSpec>& reduction_catalog();

/// Every catalog entry with this tag. Throws UnsupportedSpec when none.
std::vector<ReductionSpec> find_specs(std::string_view tag);
/// Throws UnsupportedSpec.
const ReductionSpec& find_spec(OpSet ops, Variant variant);

/// Builds the instance. Throws UnsupportedSpec when s.kind does not match,
/// and NonSquareProduct when the construction needs sqrt(prod a) and it is
/// not an integer, unless force_trivial_no is set; then the canonical
/// unsatisfiable instance ({1}, target 2, {+}) comes back instead.
Instance reduce(const SourceInstance& s, const ReductionSpec& spec, bool force_trivial_no = false);

using ExprWitness = std::variant<FlatExpr, ExprTree>;

/// Text of a witness against the instance values.
std::string print_witness(const ExprWitness& w, const Instance& inst);

/// Expression witness built from a source certificate; checked to hit the
/// target before returning. Throws InvalidSourceWitness.
ExprWitness witness_forward(const SourceInstance& s, const ReductionSpec& spec, const SourceWitness& w);

/// Source certificate read off an expression that attains the instance
/// target. Throws InvalidInstance when the expression misses the target and
/// WitnessShapeUnexpected when the blocks it induces are not a certificate.
SourceWitness witness_backward(const SourceInstance& s, const ReductionSpec& spec, const ExprWitness& w);

}  // namespace aec
