#pragma once

#include "aec/big_rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aec {

/// Assignment of exact rational values to variables.
using Assignment = std::map<std::string, BigRational, std::less<>>;

/// Product of variables raised to positive exponents, kept sorted by name.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  /// Factors may arrive unsorted or repeated; zero exponents are dropped.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(std::string name, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::string_view name) const;

  Monomial operator*(const Monomial& o) const;
  /// Requires `o` to divide this monomial.
  Monomial divided_by(const Monomial& o) const;
  /// Componentwise minimum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

 private:
  std::vector<Factor> factors_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, BigRational>;

  Polynomial() = default;
  Polynomial(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const BigRational& coef, Monomial m);
  static Polynomial variable(std::string name);

  /// Value-literal grammar: `coef*var^exp` terms joined by + and -.
  static Polynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; only meaningful when is_constant().
  BigRational constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::vector<std::string> variables() const;
  std::uint32_t degree() const;
  bool has_nonnegative_coefficients() const;

  /// Coefficient of the largest monomial in map order; nonzero polynomials only.
  const BigRational& leading_coefficient() const { return terms_.rbegin()->second; }
  /// Greatest monomial dividing every term; nonzero polynomials only.
  Monomial monomial_content() const;
  /// Positive rational c such that this/c has coprime integer coefficients.
  BigRational content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const BigRational& c) const;
  /// Exact division by a monomial that divides every term.
  Polynomial divided_by(const Monomial& m) const;

  /// Throws MissingVariable.
  BigRational evaluate(const Assignment& at) const;
  /// Residue modulo 2^61-1 at point set `set`; empty if a coefficient
  /// denominator vanishes modulo the prime.
  std::optional<std::uint64_t> residue(int set) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const BigRational& c);
  Terms terms_;
};

}  // namespace aec
