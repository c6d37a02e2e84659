#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace aec {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
/// Zero is stored as 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value) : q_(value) {}
  /// Throws DivisionByZero when `den` is zero.
  BigRational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q" with optional leading sign.
  static BigRational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string to_string() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  /// Throws DivisionByZero.
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit BigRational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// Exact integer square root; empty when `n` is not a perfect square.
/// Requires n >= 0.
std::optional<BigInt> int_sqrt(const BigInt& n);

/// Residue of `value` modulo `modulus` in [0, modulus).
std::uint64_t mod_u64(const BigInt& value, std::uint64_t modulus);

}  // namespace aec
