#include "aec/verify.hpp"

#include "aec/errors.hpp"
#include "aec/parallel.hpp"
#include "aec/solver_ep.hpp"
#include "aec/solver_np.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace aec {

namespace {

bool size_allowed(SourceKind kind, std::size_t n) {
  switch (kind) {
    case SourceKind::ProductPartitionHalf:
      return n % 2 == 0;
    case SourceKind::ThreePartition3:
      return n % 3 == 0;
    default:
      return true;
  }
}

void multisets(std::size_t n, long max_value, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  long lo = cur.empty() ? 1 : cur.back();
  for (long v = lo; v <= max_value; ++v) {
    cur.push_back(v);
    multisets(n, max_value, cur, out);
    cur.pop_back();
  }
}

struct CaseResult {
  bool source_yes = false;
  bool target_yes = false;
  bool trivial_no = false;
  bool forward = false;
  bool backward = false;
  std::uint64_t cross_domain = 0;
  std::vector<std::string> failures;
};

Value evaluate(const ExprWitness& w, std::span<const Value> values) {
  if (const auto* flat = std::get_if<FlatExpr>(&w)) return eval_flat(*flat, values);
  return eval_tree(std::get<ExprTree>(w), values);
}

/// Re-evaluates `w` with every variable set to kLargeSubstitute.
bool cross_domain(const ExprWitness& w, const Instance& inst) {
  Assignment at;
  auto collect = [&](const Value& v) {
    for (const auto* p : {&v.function().num(), &v.function().den()}) {
      for (const auto& var : p->variables()) at.emplace(var, BigRational(kLargeSubstitute));
    }
  };
  for (const auto& v : inst.values) collect(v);
  collect(inst.target);
  std::vector<Value> values;
  for (const auto& v : inst.values) values.emplace_back(v.eval_at(at));
  Value target(inst.target.eval_at(at));
  return evaluate(w, values) == target;
}

CaseResult run_case(const SourceInstance& s, const ReductionSpec& spec) {
  CaseResult r;
  try {
    auto certificate = decide_source(s);
    r.source_yes = certificate.has_value();
    Instance inst;
    try {
      inst = reduce(s, spec);
    } catch (const NonSquareProduct&) {
      r.trivial_no = true;
      if (r.source_yes) r.failures.push_back("product is not a square yet the source is a yes instance");
      return r;
    }
    SolverOptions options;
    std::optional<ExprWitness> found;
    if (spec.variant == Variant::NP) {
      if (auto res = solve_np(inst, options); res.witness) found = *res.witness;
    } else {
      if (auto res = solve_ep(inst, options); res.witness) found = *res.witness;
    }
    r.target_yes = found.has_value();
    if (r.source_yes != r.target_yes) {
      r.failures.push_back(std::string("source answers ") + (r.source_yes ? "yes" : "no") + ", instance answers " +
                           (r.target_yes ? "yes" : "no") +
                           (found ? " with " + print_witness(*found, inst) : std::string()));
    }
    const bool poly = inst.domain() == Domain::Function;
    if (certificate) {
      ExprWitness forward = witness_forward(s, spec, *certificate);
      r.forward = true;
      if (poly) {
        ++r.cross_domain;
        if (!cross_domain(forward, inst)) {
          r.failures.push_back("forward witness " + print_witness(forward, inst) + " fails after substitution");
        }
      }
    }
    if (found) {
      try {
        witness_backward(s, spec, *found);
        r.backward = true;
      } catch (const WitnessShapeUnexpected& e) {
        r.failures.push_back(e.what());
      }
      if (poly) {
        ++r.cross_domain;
        if (!cross_domain(*found, inst)) {
          r.failures.push_back("solver witness " + print_witness(*found, inst) + " fails after substitution");
        }
      }
    }
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("error: ") + e.what());
  }
  return r;
}

}  // namespace

std::uint64_t VerifyReport::counterexample_count() const {
  std::uint64_t n = 0;
  for (const auto& e : entries) n += e.counterexamples.size();
  return n;
}

std::vector<SourceInstance> enumerate_sources(SourceKind kind, const VerifyOptions& options) {
  std::vector<SourceInstance> out;
  for (std::size_t n = 1; n <= options.max_n; ++n) {
    if (!size_allowed(kind, n)) continue;
    std::vector<std::vector<long>> sets;
    if (options.samples > 0 && n > kExhaustiveMaxN) {
      std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * n));
      std::uniform_int_distribution<long> pick(1, options.max_value);
      std::set<std::vector<long>> drawn;
      for (std::size_t k = 0; k < options.samples; ++k) {
        std::vector<long> v(n);
        for (auto& x : v) x = pick(rng);
        std::sort(v.begin(), v.end());
        drawn.insert(v);
      }
      sets.assign(drawn.begin(), drawn.end());
    } else {
      std::vector<long> cur;
      multisets(n, options.max_value, cur, sets);
    }
    for (const auto& v : sets) {
      SourceInstance s;
      s.kind = kind;
      for (long x : v) s.values.emplace_back(x);
      out.push_back(std::move(s));
    }
  }
  return out;
}

VerifyReport verify_reduction(std::string_view tag, const VerifyOptions& options) {
  VerifyReport report;
  report.tag = std::string(tag);
  report.options = options;
  report.options.threads = 0;
  report.sampled = options.samples > 0 && options.max_n > kExhaustiveMaxN;
  unsigned threads = options.threads == 0 ? default_threads() : options.threads;
  for (const ReductionSpec& spec : find_specs(tag)) {
    EntryReport entry;
    entry.spec = spec;
    std::vector<SourceInstance> sources = enumerate_sources(spec.source, options);
    std::vector<CaseResult> results(sources.size());
    parallel_for(sources.size(), threads, [&](std::size_t i) { results[i] = run_case(sources[i], spec); });
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const CaseResult& r = results[i];
      ++entry.cases;
      entry.source_yes += r.source_yes;
      entry.target_yes += r.target_yes;
      entry.trivial_no += r.trivial_no;
      entry.forward_checked += r.forward;
      entry.backward_checked += r.backward;
      entry.cross_domain_checked += r.cross_domain;
      for (const auto& f : r.failures) entry.counterexamples.push_back({sources[i].encode(), f});
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "construction " << report.tag << ": max n " << report.options.max_n << ", values 1.."
      << report.options.max_value;
  if (report.sampled) out << ", " << report.options.samples << " samples per size above " << kExhaustiveMaxN
                          << " (seed " << report.options.seed << ")";
  out << "\n";
  for (const auto& e : report.entries) {
    out << "  ops {" << e.spec.ops.to_string() << "} " << to_string(e.spec.variant) << " from "
        << to_string(e.spec.source) << ": " << e.cases << " sources, " << e.source_yes << " yes, " << e.target_yes
        << " solved, " << e.trivial_no << " non-square, " << e.forward_checked << " forward, "
        << e.backward_checked << " backward, " << e.cross_domain_checked << " substituted, "
        << e.counterexamples.size() << " counterexamples\n";
    for (const auto& c : e.counterexamples) out << "    " << c.source << ": " << c.message << "\n";
  }
  out << (report.ok() ? "OK" : "FAILED") << "\n";
  return out.str();
}

}  // namespace aec
