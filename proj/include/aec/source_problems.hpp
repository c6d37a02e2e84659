#pragma once

#include "aec/big_rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aec {

enum class SourceKind { Partition, ProductPartition, ProductPartitionHalf, ThreePartition3 };

/// "partition", "product-partition", "product-partition-half", "3-partition-3".
std::string to_string(SourceKind kind);
SourceKind parse_source_kind(std::string_view text);

struct SourceInstance {
  SourceKind kind = SourceKind::Partition;
  std::vector<BigInt> values;

  /// Throws InvalidInstance: empty, nonpositive values, odd size for
  /// product-partition-half, size not a multiple of 3 for 3-partition-3.
  void validate() const;
  /// Canonical text such as "partition[1,2,3]".
  std::string encode() const;
};

/// Blocks of value indices. Partition problems use two blocks;
/// product-partition may leave the second block empty (an empty product is 1).
using SourceWitness = std::vector<std::vector<std::size_t>>;

/// Largest instance decide_source accepts for `kind`.
std::size_t source_bound(SourceKind kind);

/// Brute-force decision. The witness for a two-block problem has the
/// block holding index 0 first. Throws BoundExceeded or InvalidInstance.
std::optional<SourceWitness> decide_source(const SourceInstance& s);

/// Whether `w` is a valid certificate for `s`.
bool is_source_witness(const SourceInstance& s, const SourceWitness& w);

/// Text such as "{1,2} | {3}".
std::string format_witness(const SourceInstance& s, const SourceWitness& w);

}  // namespace aec
