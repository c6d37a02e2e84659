#include "aec/source_problems.hpp"

#include "aec/errors.hpp"

#include <numeric>

namespace aec {

namespace {

BigInt sum_of(const std::vector<BigInt>& a, const std::vector<std::size_t>& idx) {
  BigInt s = 0;
  for (std::size_t i : idx) s += a[i];
  return s;
}

BigInt product_of(const std::vector<BigInt>& a, const std::vector<std::size_t>& idx) {
  BigInt p = 1;
  for (std::size_t i : idx) p *= a[i];
  return p;
}

SourceWitness split(std::uint32_t mask, std::size_t n) {
  SourceWitness w(2);
  for (std::size_t i = 0; i < n; ++i) w[(mask >> i & 1) ? 0 : 1].push_back(i);
  return w;
}

bool three_partition(const std::vector<BigInt>& a, const BigInt& target, std::vector<bool>& used,
                     SourceWitness& out) {
  std::size_t first = 0;
  while (first < a.size() && used[first]) ++first;
  if (first == a.size()) return true;
  used[first] = true;
  for (std::size_t j = first + 1; j < a.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    for (std::size_t k = j + 1; k < a.size(); ++k) {
      if (used[k] || a[first] + a[j] + a[k] != target) continue;
      used[k] = true;
      out.push_back({first, j, k});
      if (three_partition(a, target, used, out)) return true;
      out.pop_back();
      used[k] = false;
    }
    used[j] = false;
  }
  used[first] = false;
  return false;
}

}  // namespace

std::string to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::Partition:
      return "partition";
    case SourceKind::ProductPartition:
      return "product-partition";
    case SourceKind::ProductPartitionHalf:
      return "product-partition-half";
    case SourceKind::ThreePartition3:
      return "3-partition-3";
  }
  return "?";
}

SourceKind parse_source_kind(std::string_view text) {
  for (SourceKind k : {SourceKind::Partition, SourceKind::ProductPartition, SourceKind::ProductPartitionHalf,
                       SourceKind::ThreePartition3}) {
    if (text == to_string(k)) return k;
  }
  throw ParseError("unknown source kind '" + std::string(text) + "'", 0);
}

void SourceInstance::validate() const {
  if (values.empty()) throw InvalidInstance("source instance has no values");
  for (const auto& v : values) {
    if (v <= 0) throw InvalidInstance("source values must be positive");
  }
  if (kind == SourceKind::ProductPartitionHalf && values.size() % 2 != 0) {
    throw InvalidInstance("product-partition-half needs an even number of values");
  }
  if (kind == SourceKind::ThreePartition3 && values.size() % 3 != 0) {
    throw InvalidInstance("3-partition-3 needs a multiple of 3 values");
  }
}

std::string SourceInstance::encode() const {
  std::string out = to_string(kind) + "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].get_str();
  }
  return out + "]";
}

std::size_t source_bound(SourceKind kind) { return kind == SourceKind::ThreePartition3 ? 9 : 12; }

std::optional<SourceWitness> decide_source(const SourceInstance& s) {
  s.validate();
  const std::size_t n = s.values.size();
  if (n > source_bound(s.kind)) {
    throw BoundExceeded(to_string(s.kind) + " decider is limited to " + std::to_string(source_bound(s.kind)) +
                        " values");
  }
  const auto& a = s.values;
  if (s.kind == SourceKind::ThreePartition3) {
    BigInt total = std::accumulate(a.begin(), a.end(), BigInt(0));
    BigInt groups = static_cast<unsigned long>(n / 3);
    if (total % groups != 0) return std::nullopt;
    BigInt target = total / groups;
    std::vector<bool> used(n, false);
    SourceWitness w;
    if (three_partition(a, target, used, w)) return w;
    return std::nullopt;
  }
  // Two-block problems: index 0 always goes in the first block.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    SourceWitness w = split(mask, n);
    if (s.kind == SourceKind::ProductPartition && w[1].empty()) continue;
    if (is_source_witness(s, w)) return w;
  }
  if (s.kind == SourceKind::ProductPartition) {
    SourceWitness w = split(full, n);
    if (is_source_witness(s, w)) return w;
  }
  return std::nullopt;
}

bool is_source_witness(const SourceInstance& s, const SourceWitness& w) {
  const std::size_t n = s.values.size();
  std::vector<int> seen(n, 0);
  for (const auto& block : w) {
    for (std::size_t i : block) {
      if (i >= n || seen[i]++) return false;
    }
  }
  for (int c : seen) {
    if (c != 1) return false;
  }
  const auto& a = s.values;
  switch (s.kind) {
    case SourceKind::Partition:
      return w.size() == 2 && sum_of(a, w[0]) == sum_of(a, w[1]);
    case SourceKind::ProductPartition:
      return w.size() == 2 && product_of(a, w[0]) == product_of(a, w[1]);
    case SourceKind::ProductPartitionHalf:
      return w.size() == 2 && w[0].size() == n / 2 && w[1].size() == n / 2 &&
             product_of(a, w[0]) == product_of(a, w[1]);
    case SourceKind::ThreePartition3: {
      if (w.size() != n / 3) return false;
      for (const auto& block : w) {
        if (block.size() != 3 || sum_of(a, block) != sum_of(a, w[0])) return false;
      }
      return true;
    }
  }
  return false;
}

std::string format_witness(const SourceInstance& s, const SourceWitness& w) {
  std::string out;
  for (std::size_t b = 0; b < w.size(); ++b) {
    if (b) out += " | ";
    out += "{";
    for (std::size_t k = 0; k < w[b].size(); ++k) {
      if (k) out += ",";
      out += s.values[w[b][k]].get_str();
    }
    out += "}";
  }
  return out;
}

}  // namespace aec
