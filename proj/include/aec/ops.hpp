#pragma once

#include "aec/value.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aec {

enum class Op : std::uint8_t { Add, Sub, Mul, Div };

inline constexpr std::array<Op, 4> kAllOps = {Op::Add, Op::Sub, Op::Mul, Op::Div};

char symbol(Op op);
bool is_commutative(Op op);
bool is_additive(Op op);
/// Throws DivisionByZero for Div by zero.
Value apply(Op op, const Value& left, const Value& right);

/// Nonempty subset of {+, -, *, /}, iterated in the order + - * /.
class OpSet {
 public:
  OpSet() = default;
  OpSet(std::initializer_list<Op> ops);
  static OpSet from_bits(std::uint8_t bits);
  /// Accepts ASCII "+-*/" plus the Unicode minus, times and division signs.
  static OpSet parse(std::string_view text);
  /// Every nonempty subset, in increasing bit order (15 sets).
  static std::vector<OpSet> all_nonempty();

  bool contains(Op op) const { return bits_ & bit(op); }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool is_singleton() const { return size() == 1; }
  std::uint8_t bits() const { return bits_; }
  std::vector<Op> ops() const;
  bool has_additive() const { return contains(Op::Add) || contains(Op::Sub); }
  bool has_multiplicative() const { return contains(Op::Mul) || contains(Op::Div); }

  /// Canonical text such as "+-*/".
  std::string to_string() const;

  friend bool operator==(OpSet, OpSet) = default;

 private:
  static constexpr std::uint8_t bit(Op op) { return std::uint8_t(1u << static_cast<unsigned>(op)); }
  std::uint8_t bits_ = 0;
};

}  // namespace aec
