#include "aec/big_rational.hpp"

#include "aec/errors.hpp"

#include <cctype>

namespace aec {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("expected integer", offset);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", offset + i);
    }
  }
  return BigInt(std::string(text), 10);
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  std::string_view body = text.substr(pos);
  auto slash = body.find('/');
  BigInt num = parse_integer(body.substr(0, slash), pos);
  BigInt den = 1;
  if (slash != std::string_view::npos) den = parse_integer(body.substr(slash + 1), pos + slash + 1);
  if (negative) num = -num;
  return BigRational(num, den);
}

std::string BigRational::to_string() const { return q_.get_str(10); }

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

BigRational& BigRational::operator+=(const BigRational& o) {
  q_ += o.q_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  q_ -= o.q_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  q_ *= o.q_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

std::optional<BigInt> int_sqrt(const BigInt& n) {
  if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::uint64_t mod_u64(const BigInt& value, std::uint64_t modulus) {
  static_assert(sizeof(unsigned long) == 8, "needs 64-bit unsigned long");
  return mpz_fdiv_ui(value.get_mpz_t(), modulus);
}

}  // namespace aec
