#pragma once

// Shared machinery for the split-and-combine solvers (std and ep).

#include "aec/ops.hpp"
#include "aec/value.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace aec::detail {

/// Deduplicated set of values with one back-pointer per distinct value.
template <class Back>
class ValueSet {
 public:
  bool insert(Value v, const Back& back) {
    std::uint64_t fp = v.fingerprint();
    auto [lo, hi] = index_.equal_range(fp);
    for (auto it = lo; it != hi; ++it) {
      if (values_[it->second] == v) return false;
    }
    index_.emplace(fp, static_cast<std::uint32_t>(values_.size()));
    values_.push_back(std::move(v));
    back_.push_back(back);
    return true;
  }

  std::optional<std::uint32_t> find(const Value& v) const {
    auto [lo, hi] = index_.equal_range(v.fingerprint());
    for (auto it = lo; it != hi; ++it) {
      if (values_[it->second] == v) return it->second;
    }
    return std::nullopt;
  }

  std::size_t size() const { return values_.size(); }
  const Value& value(std::uint32_t i) const { return values_[i]; }
  const Back& back(std::uint32_t i) const { return back_[i]; }
  const std::vector<Value>& values() const { return values_; }

 private:
  std::vector<Value> values_;
  std::vector<Back> back_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
};

/// What the right operand must be for `l op r` (or `r op l` when
/// `left_first` is false) to equal `t`.
struct Requirement {
  enum class Kind { Exact, Any, AnyNonzero, Impossible } kind = Kind::Impossible;
  Value value;
};

inline Requirement required_operand(Op op, bool left_first, const Value& l, const Value& t) {
  using K = Requirement::Kind;
  switch (op) {
    case Op::Add:
      return {K::Exact, t - l};
    case Op::Sub:
      return left_first ? Requirement{K::Exact, l - t} : Requirement{K::Exact, t + l};
    case Op::Mul:
      if (!l.is_zero()) return {K::Exact, t / l};
      return t.is_zero() ? Requirement{K::Any, {}} : Requirement{};
    case Op::Div:
      if (left_first) {
        if (!t.is_zero()) return l.is_zero() ? Requirement{} : Requirement{K::Exact, l / t};
        return l.is_zero() ? Requirement{K::AnyNonzero, {}} : Requirement{};
      }
      if (l.is_zero()) return {};
      return {K::Exact, t * l};
  }
  return {};
}

/// Index in `set` satisfying `req`, if any.
template <class Back>
std::optional<std::uint32_t> satisfy(const ValueSet<Back>& set, const Requirement& req) {
  using K = Requirement::Kind;
  switch (req.kind) {
    case K::Exact:
      return set.find(req.value);
    case K::Any:
      if (set.size() > 0) return 0u;
      return std::nullopt;
    case K::AnyNonzero:
      for (std::uint32_t i = 0; i < set.size(); ++i) {
        if (!set.value(i).is_zero()) return i;
      }
      return std::nullopt;
    case K::Impossible:
      return std::nullopt;
  }
  return std::nullopt;
}

/// Masks over n bits grouped by population count, each group ascending.
inline std::vector<std::vector<std::uint32_t>> masks_by_popcount(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out(n + 1);
  for (std::uint32_t m = 1; m < (1u << n); ++m) out[static_cast<std::size_t>(__builtin_popcount(m))].push_back(m);
  return out;
}

}  // namespace aec::detail
