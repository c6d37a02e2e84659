#pragma once

#include "aec/big_rational.hpp"
#include "aec/rational_function.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace aec {

enum class Domain { Rational, Function };

/// Exact scalar: a big rational or a multivariate rational function.
/// Arithmetic between the two domains throws MixedDomain.
class Value {
 public:
  Value() : v_(BigRational{}) {}
  Value(BigRational r) : v_(std::move(r)) {}        // NOLINT(google-explicit-constructor)
  Value(RationalFunction f) : v_(std::move(f)) {}   // NOLINT(google-explicit-constructor)
  Value(long v) : v_(BigRational(v)) {}             // NOLINT(google-explicit-constructor)

  /// Parses a value literal. Literals with variables land in the function
  /// domain, others in the rational domain unless `domain` forces one.
  static Value parse(std::string_view text, std::optional<Domain> domain = std::nullopt);
  static Value from_polynomial(const Polynomial& p, Domain domain);

  Domain domain() const { return v_.index() == 0 ? Domain::Rational : Domain::Function; }
  bool is_rational() const { return v_.index() == 0; }
  const BigRational& rational() const { return std::get<BigRational>(v_); }
  const RationalFunction& function() const { return std::get<RationalFunction>(v_); }

  bool is_zero() const;
  /// Same value moved into `domain`. Function values only convert back to
  /// the rational domain when they are constant.
  Value in_domain(Domain domain) const;

  /// Equal values share a fingerprint; unequal values collide with
  /// probability about 2^-61 per pair.
  std::uint64_t fingerprint() const;
  /// Homomorphic image modulo 2^61-1 at point set `set`; empty when the
  /// denominator (or a coefficient denominator) vanishes modulo the prime.
  std::optional<std::uint64_t> residue(int set) const;

  /// Exact value at the point. Rationals evaluate to themselves.
  BigRational eval_at(const Assignment& at) const;

  /// Value-literal text ("98", "7/2", "x^3-x", "(x+1)/(y)").
  std::string to_string() const;
  /// Whether to_string() is a bare token usable as an expression leaf.
  bool is_atomic_literal() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  /// Throws DivisionByZero.
  friend Value operator/(const Value& a, const Value& b);
  Value operator-() const;

  /// Throws MixedDomain.
  friend bool operator==(const Value& a, const Value& b);

 private:
  std::variant<BigRational, RationalFunction> v_;
};

inline Value add(const Value& a, const Value& b) { return a + b; }
inline Value sub(const Value& a, const Value& b) { return a - b; }
inline Value mul(const Value& a, const Value& b) { return a * b; }
inline Value div(const Value& a, const Value& b) { return a / b; }
inline bool equals(const Value& a, const Value& b) { return a == b; }
inline std::uint64_t fingerprint(const Value& a) { return a.fingerprint(); }
inline BigRational eval_at(const Value& a, const Assignment& at) { return a.eval_at(at); }

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.fingerprint(); }
};

}  // namespace aec
