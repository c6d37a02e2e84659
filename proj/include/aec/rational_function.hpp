#pragma once

#include "aec/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace aec {

/// Quotient of two polynomials. Common monomial factors and the
/// denominator's content are cancelled; no multivariate gcd is taken, so
/// the representation is not unique. Compare with operator==, which
/// cross-multiplies.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(Polynomial{}) {}
  explicit RationalFunction(Polynomial num);
  /// Throws DivisionByZero when `den` is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Residue num/den modulo 2^61-1 at point set `set`; empty when the
  /// denominator vanishes there.
  std::optional<std::uint64_t> residue(int set) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws DivisionByZero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// Mathematical equality by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Throws MissingVariable or VanishingDenominator.
  BigRational evaluate(const Assignment& at) const;

  /// Polynomial literal when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_{BigRational(1)};
  std::uint64_t fingerprint_ = 0;
};

}  // namespace aec
