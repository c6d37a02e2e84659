#include "aec/instance.hpp"

#include "aec/errors.hpp"
#include "aec/expression_parser.hpp"

namespace aec {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Std: return "std";
    case Variant::EP: return "ep";
    case Variant::NP: return "np";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  if (text == "std") return Variant::Std;
  if (text == "ep") return Variant::EP;
  if (text == "np") return Variant::NP;
  throw InvalidInstance("unknown variant '" + std::string(text) + "' (expected std, ep or np)");
}

void Instance::validate() const {
  if (values.empty()) throw EmptyInstance();
  if (ops.empty()) throw InvalidInstance("operator set is empty");
  for (const auto& v : values) {
    if (v.domain() != target.domain()) throw MixedDomain();
  }
  if (variant == Variant::EP) {
    if (!shape) throw InvalidInstance("enforced-parenthesis instance needs a tree shape");
    if (shape->leaf_count() != values.size()) throw LeafCountMismatch(shape->leaf_count(), values.size());
  }
}

bool check_witness(const Instance& inst, std::string_view witness, bool ordered) {
  std::optional<ParsedExpression> parsed_or;
  try {
    parsed_or = parse_expression(witness, inst.domain());
  } catch (const Error&) {
    return false;
  }
  const ParsedExpression& parsed = *parsed_or;
  if (parsed.values.size() != inst.values.size()) return false;

  // Match parsed leaves to instance values as a multiset.
  std::vector<bool> taken(inst.values.size(), false);
  for (std::size_t i = 0; i < parsed.values.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < inst.values.size() && !found; ++j) {
      if (!taken[j] && parsed.values[i] == inst.values[j]) {
        taken[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }

  std::vector<const ExprTree*> stack{&parsed.tree};
  while (!stack.empty()) {
    const ExprTree* t = stack.back();
    stack.pop_back();
    if (t->is_leaf()) continue;
    if (!inst.ops.contains(t->op())) return false;
    stack.push_back(&t->left());
    stack.push_back(&t->right());
  }
  if (inst.variant == Variant::NP && witness.find('(') != std::string_view::npos) return false;
  if (inst.variant == Variant::EP && (!inst.shape || !isomorphic(shape_of(parsed.tree), *inst.shape, ordered))) {
    return false;
  }
  try {
    return eval_tree(parsed.tree, parsed.values) == inst.target;
  } catch (const DivisionByZero&) {
    return false;
  }
}

}  // namespace aec
