#pragma once

#include "aec/instance.hpp"
#include "aec/source_problems.hpp"
#include "aec/tree_shape.hpp"
#include "aec/verify.hpp"

#include "json.hpp"

namespace aec {

using Json = nlohmann::ordered_json;

/// Shape as nested pairs: null is a leaf, [a, b] joins two subshapes.
Json shape_to_json(const TreeShape& shape);
/// Throws ParseError.
TreeShape shape_from_json(const Json& j);

/// {"variant","ops","values","target","tree","provenance"}. Values and
/// target are value-literal strings; plain JSON integers are accepted on
/// input. Throws ParseError or the instance validation errors.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// {"kind","values"}. Throws ParseError or InvalidInstance.
Json source_to_json(const SourceInstance& s);
SourceInstance source_from_json(const Json& j);

Json report_to_json(const VerifyReport& report);

}  // namespace aec
