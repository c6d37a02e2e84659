#include "aec/value.hpp"

#include "aec/errors.hpp"
#include "aec/modular.hpp"

namespace aec {

Value Value::parse(std::string_view text, std::optional<Domain> domain) {
  Polynomial p = Polynomial::parse(text);
  Domain d = domain.value_or(p.is_constant() ? Domain::Rational : Domain::Function);
  return from_polynomial(p, d);
}

Value Value::from_polynomial(const Polynomial& p, Domain domain) {
  if (domain == Domain::Function) return Value(RationalFunction(p));
  if (!p.is_constant()) throw InvalidInstance("literal '" + p.to_string() + "' has variables");
  return Value(p.constant_value());
}

bool Value::is_zero() const {
  return is_rational() ? rational().is_zero() : function().is_zero();
}

Value Value::in_domain(Domain domain) const {
  if (domain == this->domain()) return *this;
  if (domain == Domain::Function) return Value(RationalFunction(Polynomial(rational())));
  const RationalFunction& f = function();
  if (!f.num().is_constant() || !f.den().is_constant()) {
    throw InvalidInstance("value '" + f.to_string() + "' is not a constant");
  }
  return Value(f.num().constant_value() / f.den().constant_value());
}

std::optional<std::uint64_t> Value::residue(int set) const {
  if (!is_rational()) return function().residue(set);
  std::uint64_t den = mod_u64(rational().den(), modp::kPrime);
  if (den == 0) return std::nullopt;
  return modp::mul(mod_u64(rational().num(), modp::kPrime), modp::inv(den));
}

std::uint64_t Value::fingerprint() const {
  if (!is_rational()) return function().fingerprint();
  if (auto r = residue(0)) return modp::mix(*r);
  return modp::mix(modp::mix(mod_u64(rational().num(), modp::kPrime - 2)) ^
                   mod_u64(rational().den(), modp::kPrime - 2));
}

BigRational Value::eval_at(const Assignment& at) const {
  return is_rational() ? rational() : function().evaluate(at);
}

std::string Value::to_string() const {
  return is_rational() ? rational().to_string() : function().to_string();
}

bool Value::is_atomic_literal() const {
  if (is_rational()) return rational().is_integer() && rational().sign() >= 0;
  const RationalFunction& f = function();
  if (!f.den().is_constant()) return false;
  const Polynomial& p = f.num();
  if (p.is_zero()) return true;
  if (!p.is_monomial()) return false;
  const auto& [m, c] = *p.terms().begin();
  if (m.is_one()) return c.is_integer() && c.sign() > 0;
  return c == BigRational(1) && m.factors().size() == 1;
}

namespace {

template <class F>
Value apply(const Value& a, const Value& b, F&& f) {
  if (a.domain() != b.domain()) throw MixedDomain();
  if (a.is_rational()) return Value(f(a.rational(), b.rational()));
  return Value(f(a.function(), b.function()));
}

}  // namespace

Value operator+(const Value& a, const Value& b) {
  return apply(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Value operator-(const Value& a, const Value& b) {
  return apply(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Value operator*(const Value& a, const Value& b) {
  return apply(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Value operator/(const Value& a, const Value& b) {
  return apply(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Value Value::operator-() const {
  if (is_rational()) return Value(-rational());
  return Value(-function());
}

bool operator==(const Value& a, const Value& b) {
  if (a.domain() != b.domain()) throw MixedDomain();
  if (a.is_rational()) return a.rational() == b.rational();
  return a.function() == b.function();
}

}  // namespace aec
