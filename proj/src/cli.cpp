#include "aec/cli.hpp"

#include "aec/errors.hpp"
#include "aec/expression_parser.hpp"
#include "aec/json_io.hpp"
#include "aec/oracle.hpp"
#include "aec/parallel.hpp"
#include "aec/reductions.hpp"
#include "aec/solver_ep.hpp"
#include "aec/solver_np.hpp"
#include "aec/solver_std.hpp"
#include "aec/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace aec {

namespace {

/// Carries an exit code out of a command body.
struct Exit {
  int code;
  std::string message;
};

std::string read_input(const std::string& path, const std::string& input) {
  if (path == "-") return input;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitInputError, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Exit{kExitInputError, std::string("malformed JSON: ") + e.what()};
  }
}

struct SolveArgs {
  std::string file;
  unsigned threads = 0;
  bool no_timing = false;
  bool ordered = false;
};

Json cmd_solve(const SolveArgs& a, const std::string& input) {
  Instance inst = instance_from_json(parse_json(read_input(a.file, input)));
  SolverOptions options;
  options.threads = a.threads == 0 ? default_threads() : a.threads;
  options.ordered_shapes = a.ordered;
  auto start = std::chrono::steady_clock::now();
  std::optional<std::string> witness;
  SolveStats stats;
  switch (inst.variant) {
    case Variant::Std: {
      auto r = solve_std(inst, options);
      stats = r.stats;
      if (r.witness) witness = print_full_paren(*r.witness, inst.values);
      break;
    }
    case Variant::EP: {
      auto r = solve_ep(inst, options);
      stats = r.stats;
      if (r.witness) witness = print_full_paren(*r.witness, inst.values);
      break;
    }
    case Variant::NP: {
      auto r = solve_np(inst, options);
      stats = r.stats;
      if (r.witness) witness = print_flat(*r.witness, inst.values);
      break;
    }
  }
  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  Json out;
  out["solvable"] = witness.has_value();
  out["witness"] = witness ? Json(*witness) : Json(nullptr);
  Json s;
  s["nodes"] = stats.nodes;
  s["memo_entries"] = stats.memo_entries;
  if (!a.no_timing) s["millis"] = millis.count();
  out["stats"] = s;
  return out;
}

struct ReduceArgs {
  std::string file;
  std::string from;
  std::string ops;
  std::string variant = "np";
  bool force_trivial_no = false;
};

Json cmd_reduce(const ReduceArgs& a, const std::string& input) {
  Json j = parse_json(read_input(a.file, input));
  if (j.is_object() && !j.contains("kind") && !a.from.empty()) j["kind"] = a.from;
  SourceInstance s = source_from_json(j);
  if (!a.from.empty() && parse_source_kind(a.from) != s.kind) {
    throw Exit{kExitInputError, "--from " + a.from + " disagrees with the file's kind " + to_string(s.kind)};
  }
  const ReductionSpec& spec = find_spec(OpSet::parse(a.ops), parse_variant(a.variant));
  return instance_to_json(reduce(s, spec, a.force_trivial_no));
}

struct VerifyArgs {
  std::string spec;
  std::size_t max_n = 5;
  long max_value = 8;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

std::pair<Json, VerifyReport> cmd_verify(const VerifyArgs& a) {
  VerifyOptions o;
  o.max_n = a.max_n;
  o.max_value = a.max_value;
  o.samples = a.samples;
  o.seed = a.seed;
  o.threads = a.threads;
  if (a.max_value < 1) throw Exit{kExitInputError, "--max-value must be at least 1"};
  VerifyReport report = verify_reduction(a.spec, o);
  return {report_to_json(report), report};
}

struct OracleArgs {
  std::string file;
  std::size_t limit = 10;
  bool ordered = false;
};

Json cmd_oracle(const OracleArgs& a, const std::string& input) {
  Instance inst = instance_from_json(parse_json(read_input(a.file, input)));
  std::uint64_t hits = 0;
  Json shown = Json::array();
  auto consider = [&](const Value& v, const auto& print) {
    if (!(v == inst.target)) return;
    ++hits;
    if (shown.size() < a.limit) shown.push_back(print());
  };
  OracleCount count;
  switch (inst.variant) {
    case Variant::Std:
      count = enumerate_std(inst.values, inst.ops, [&](const ExprTree& t, const Value& v) {
        consider(v, [&] { return print_full_paren(t, inst.values); });
      });
      break;
    case Variant::EP:
      count = enumerate_ep(
          inst.values, inst.ops, *inst.shape,
          [&](const ExprTree& t, const Value& v) { consider(v, [&] { return print_full_paren(t, inst.values); }); },
          a.ordered);
      break;
    case Variant::NP:
      count = enumerate_np(inst.values, inst.ops, [&](const FlatExpr& e, const Value& v) {
        consider(v, [&] { return print_flat(e, inst.values); });
      });
      break;
  }
  Json out;
  out["streamed"] = count.streamed;
  out["skipped"] = count.skipped;
  out["attaining"] = hits;
  out["witnesses"] = shown;
  return out;
}

struct EvalArgs {
  std::string expression;
  std::vector<std::string> at;
};

Json cmd_eval(const EvalArgs& a) {
  ParsedExpression parsed = parse_expression(a.expression);
  if (a.at.empty()) return eval_tree(parsed.tree, parsed.values).to_string();
  Assignment at;
  for (const auto& binding : a.at) {
    auto eq = binding.find('=');
    if (eq == std::string::npos) throw Exit{kExitInputError, "--at expects name=value, got " + binding};
    at.insert_or_assign(binding.substr(0, eq), BigRational::parse(binding.substr(eq + 1)));
  }
  std::vector<Value> values;
  for (const auto& v : parsed.values) values.emplace_back(v.eval_at(at));
  return eval_tree(parsed.tree, values).to_string();
}

struct ShapesArgs {
  std::size_t n = 1;
  bool ordered = false;
};

inline constexpr std::size_t kShapesMaxLeaves = 10;

Json cmd_shapes(const ShapesArgs& a) {
  if (a.n == 0) throw Exit{kExitInputError, "--n must be at least 1"};
  if (a.n > kShapesMaxLeaves) throw BoundExceeded("shape listing is limited to 10 leaves");
  auto shapes = a.ordered ? TreeShape::all_ordered(a.n) : TreeShape::all_unordered(a.n);
  Json list = Json::array();
  for (const auto& s : shapes) list.push_back({{"code", a.ordered ? s.ordered_code() : s.code()}, {"tree", shape_to_json(s)}});
  Json out;
  out["n"] = a.n;
  out["count"] = shapes.size();
  out["shapes"] = list;
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, const std::string& input) {
  CliResult result;
  CLI::App app{"Arithmetic expression construction: solvers, reductions and checks", "aec"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Decide an instance file");
  solve->add_option("file", solve_args.file, "Instance JSON file, or - for stdin")->required();
  solve->add_option("--threads", solve_args.threads, "Worker threads (default: all cores)");
  solve->add_flag("--no-timing", solve_args.no_timing, "Leave millis out of the stats");
  solve->add_flag("--ordered", solve_args.ordered, "Enforced tree must match with child order");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build an instance from a source problem");
  reduce_cmd->add_option("file", reduce_args.file, "Source JSON file, or - for stdin")->required();
  reduce_cmd->add_option("--from", reduce_args.from, "Source kind");
  reduce_cmd->add_option("--ops", reduce_args.ops, "Target operator set, e.g. \"+-\"")->required();
  reduce_cmd->add_option("--variant", reduce_args.variant, "np or ep");
  reduce_cmd->add_flag("--force-trivial-no", reduce_args.force_trivial_no,
                       "Emit a fixed unsatisfiable instance when the product is not a square");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a construction against brute force");
  verify->add_option("--spec", verify_args.spec, "Construction tag, e.g. 2.8 or ep-div")->required();
  verify->add_option("--max-n", verify_args.max_n, "Largest source size");
  verify->add_option("--max-value", verify_args.max_value, "Largest source value");
  verify->add_option("--samples", verify_args.samples, "Random sources per size above 5 (0: exhaustive)");
  verify->add_option("--seed", verify_args.seed, "Sampling seed");
  verify->add_option("--threads", verify_args.threads, "Worker threads (default: all cores)");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Enumerate every expression of a small instance");
  oracle->add_option("file", oracle_args.file, "Instance JSON file, or - for stdin")->required();
  oracle->add_option("--limit", oracle_args.limit, "Witnesses to print");
  oracle->add_flag("--ordered", oracle_args.ordered, "Enforced tree must match with child order");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression exactly");
  eval->add_option("expression", eval_args.expression, "Expression text")->required();
  eval->add_option("--at", eval_args.at, "Substitution name=value (repeatable)");

  ShapesArgs shapes_args;
  auto* shapes = app.add_subcommand("shapes", "List tree shapes");
  shapes->add_option("--n", shapes_args.n, "Leaf count")->required();
  shapes->add_flag("--ordered", shapes_args.ordered, "List ordered shapes instead of isomorphism classes");

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Json j;
    if (solve->parsed()) {
      j = cmd_solve(solve_args, input);
    } else if (reduce_cmd->parsed()) {
      j = cmd_reduce(reduce_args, input);
    } else if (verify->parsed()) {
      auto [report_json, report] = cmd_verify(verify_args);
      j = report_json;
      err << format_report(report);
      if (!report.ok()) result.exit = kExitCounterexample;
    } else if (oracle->parsed()) {
      j = cmd_oracle(oracle_args, input);
    } else if (eval->parsed()) {
      j = cmd_eval(eval_args);
    } else if (shapes->parsed()) {
      j = cmd_shapes(shapes_args);
    }
    out << j.dump() << "\n";
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    result.exit = code == 0 ? kExitOk : kExitInputError;
  } catch (const Exit& e) {
    err << "aec: " << e.message << "\n";
    result.exit = e.code;
  } catch (const NonSquareProduct& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = kExitNonSquare;
  } catch (const DivisionByZero& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = eval->parsed() ? kExitDivisionByZero : kExitInternal;
  } catch (const VanishingDenominator& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = eval->parsed() ? kExitDivisionByZero : kExitInternal;
  } catch (const BoundExceeded& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = kExitInternal;
  } catch (const ParseError& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = kExitInputError;
  } catch (const InvalidInstance& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = kExitInputError;
  } catch (const MixedDomain& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = kExitInputError;
  } catch (const InvalidShape& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = kExitInputError;
  } catch (const UnsupportedSpec& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = kExitInputError;
  } catch (const MissingVariable& e) {
    err << "aec: " << e.what() << "\n";
    result.exit = kExitInputError;
  } catch (const std::exception& e) {
    err << "aec: internal error: " << e.what() << "\n";
    result.exit = kExitInternal;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace aec
