#pragma once

#include "aec/reductions.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aec {

struct VerifyOptions {
  std::size_t max_n = 5;
  long max_value = 8;
  /// Random sources per size for sizes above kExhaustiveMaxN; 0 keeps
  /// every size exhaustive.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

inline constexpr std::size_t kExhaustiveMaxN = 5;

/// Value substituted for every variable in the cross-domain check.
inline constexpr long kLargeSubstitute = 1000000;

struct Counterexample {
  std::string source;
  std::string message;
};

struct EntryReport {
  ReductionSpec spec;
  std::uint64_t cases = 0;
  std::uint64_t source_yes = 0;
  std::uint64_t target_yes = 0;
  std::uint64_t trivial_no = 0;  // non-square product, checked to be a source no
  std::uint64_t forward_checked = 0;
  std::uint64_t backward_checked = 0;
  std::uint64_t cross_domain_checked = 0;
  std::vector<Counterexample> counterexamples;
};

struct VerifyReport {
  std::string tag;
  VerifyOptions options;
  bool sampled = false;
  std::vector<EntryReport> entries;

  std::uint64_t counterexample_count() const;
  bool ok() const { return counterexample_count() == 0; }
};

/// Every source with sizes up to max_n and values in [1, max_value] that
/// the construction accepts, in increasing (size, values) order.
std::vector<SourceInstance> enumerate_sources(SourceKind kind, const VerifyOptions& options);

/// Checks each construction tagged `tag` on every enumerated source:
/// source decision against the solver decision, forward witnesses,
/// backward round trips of solver witnesses, and (for polynomial
/// instances) the same witnesses after substituting kLargeSubstitute for
/// every variable. Output does not depend on options.threads.
VerifyReport verify_reduction(std::string_view tag, const VerifyOptions& options);

/// Human-readable summary.
std::string format_report(const VerifyReport& report);

}  // namespace aec
