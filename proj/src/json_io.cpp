#include "aec/json_io.hpp"

#include "aec/errors.hpp"

namespace aec {

namespace {

std::string literal_text(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw ParseError(std::string(what) + " must be a string or an integer", 0);
}

OpSet ops_from_json(const Json& j) {
  if (j.is_string()) return OpSet::parse(j.get<std::string>());
  if (!j.is_array()) throw ParseError("\"ops\" must be an array of operator symbols", 0);
  std::string joined;
  for (const auto& op : j) {
    if (!op.is_string()) throw ParseError("\"ops\" entries must be strings", 0);
    joined += op.get<std::string>();
  }
  return OpSet::parse(joined);
}

// Instance values are natural numbers or polynomials over them; targets are unrestricted.
bool nonnegative_literal(const Value& v) {
  if (v.is_rational()) return v.rational().sign() >= 0;
  const auto& f = v.function();
  return f.is_polynomial() && f.den().constant_value().sign() > 0 && f.num().has_nonnegative_coefficients();
}

}  // namespace

Json shape_to_json(const TreeShape& shape) {
  if (shape.is_leaf()) return nullptr;
  return Json::array({shape_to_json(shape.first()), shape_to_json(shape.second())});
}

TreeShape shape_from_json(const Json& j) {
  if (j.is_null()) return TreeShape::leaf();
  if (!j.is_array() || j.size() != 2) throw ParseError("a tree is null (leaf) or a two-element array", 0);
  return TreeShape::pair(shape_from_json(j[0]), shape_from_json(j[1]));
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["variant"] = to_string(inst.variant);
  Json ops = Json::array();
  for (Op op : inst.ops.ops()) ops.push_back(std::string(1, symbol(op)));
  j["ops"] = ops;
  Json values = Json::array();
  for (const auto& v : inst.values) values.push_back(v.to_string());
  j["values"] = values;
  j["target"] = inst.target.to_string();
  if (inst.shape) j["tree"] = shape_to_json(*inst.shape);
  if (!inst.provenance.empty()) j["provenance"] = inst.provenance;
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object", 0);
  for (const char* key : {"values", "target", "ops"}) {
    if (!j.contains(key)) throw ParseError(std::string("instance is missing \"") + key + "\"", 0);
  }
  if (!j["values"].is_array()) throw ParseError("\"values\" must be an array", 0);
  std::vector<std::string> texts;
  for (const auto& v : j["values"]) texts.push_back(literal_text(v, "a value"));
  std::string target_text = literal_text(j["target"], "\"target\"");

  // Any literal with a variable puts the whole instance in the function domain.
  Domain domain = Domain::Rational;
  for (const auto& t : texts) {
    if (Value::parse(t).domain() == Domain::Function) domain = Domain::Function;
  }
  if (Value::parse(target_text).domain() == Domain::Function) domain = Domain::Function;

  Instance inst;
  for (const auto& t : texts) {
    inst.values.push_back(Value::parse(t, domain));
    if (!nonnegative_literal(inst.values.back())) {
      throw InvalidInstance("value \"" + t + "\" must be a polynomial with nonnegative coefficients");
    }
  }
  inst.target = Value::parse(target_text, domain);
  inst.ops = ops_from_json(j["ops"]);
  if (j.contains("variant")) {
    if (!j["variant"].is_string()) throw ParseError("\"variant\" must be a string", 0);
    inst.variant = parse_variant(j["variant"].get<std::string>());
  }
  if (j.contains("tree")) inst.shape = shape_from_json(j["tree"]);
  if (j.contains("provenance") && j["provenance"].is_string()) inst.provenance = j["provenance"].get<std::string>();
  inst.validate();
  return inst;
}

Json source_to_json(const SourceInstance& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  Json values = Json::array();
  for (const auto& v : s.values) {
    if (v.fits_slong_p()) {
      values.push_back(v.get_si());
    } else {
      values.push_back(v.get_str());
    }
  }
  j["values"] = values;
  return j;
}

SourceInstance source_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("values") || !j["kind"].is_string() ||
      !j["values"].is_array()) {
    throw ParseError("source must be {\"kind\": string, \"values\": [...]}", 0);
  }
  SourceInstance s;
  s.kind = parse_source_kind(j["kind"].get<std::string>());
  for (const auto& v : j["values"]) {
    std::string text = literal_text(v, "a source value");
    BigInt n;
    if (n.set_str(text, 10) != 0) throw ParseError("source value '" + text + "' is not an integer", 0);
    s.values.push_back(n);
  }
  s.validate();
  return s;
}

Json report_to_json(const VerifyReport& report) {
  Json j;
  j["spec"] = report.tag;
  j["max_n"] = report.options.max_n;
  j["max_value"] = report.options.max_value;
  j["samples"] = report.options.samples;
  j["seed"] = report.options.seed;
  j["sampled"] = report.sampled;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json ops = Json::array();
    for (Op op : e.spec.ops.ops()) ops.push_back(std::string(1, symbol(op)));
    Json ce = Json::array();
    for (const auto& c : e.counterexamples) ce.push_back({{"source", c.source}, {"message", c.message}});
    entries.push_back({{"ops", ops},
                       {"variant", to_string(e.spec.variant)},
                       {"source", to_string(e.spec.source)},
                       {"cases", e.cases},
                       {"source_yes", e.source_yes},
                       {"target_yes", e.target_yes},
                       {"trivial_no", e.trivial_no},
                       {"forward_checked", e.forward_checked},
                       {"backward_checked", e.backward_checked},
                       {"cross_domain_checked", e.cross_domain_checked},
                       {"counterexamples", ce}});
  }
  j["entries"] = entries;
  j["counterexamples"] = report.counterexample_count();
  j["ok"] = report.ok();
  return j;
}

}  // namespace aec
