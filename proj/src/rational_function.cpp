#include "aec/rational_function.hpp"

#include "aec/errors.hpp"
#include "aec/modular.hpp"

#include <functional>

namespace aec {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)) { normalize(); }

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(BigRational(1));
  } else {
    Monomial common = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (!common.is_one()) {
      num_ = num_.divided_by(common);
      den_ = den_.divided_by(common);
    }
    BigRational scale = den_.is_monomial() ? den_.leading_coefficient() : den_.content();
    if (den_.leading_coefficient().sign() < 0 && scale.sign() > 0) scale = -scale;
    if (scale != BigRational(1)) {
      num_ = num_.scaled(BigRational(1) / scale);
      den_ = den_.scaled(BigRational(1) / scale);
    }
  }

  fingerprint_ = 0;
  for (int set = 0; set < modp::kPointSets; ++set) {
    if (auto r = residue(set)) {
      fingerprint_ = modp::mix(*r ^ (static_cast<std::uint64_t>(set) << 61));
      return;
    }
  }
  fingerprint_ = modp::mix(std::hash<std::string>{}(to_string()));
}

std::optional<std::uint64_t> RationalFunction::residue(int set) const {
  auto n = num_.residue(set);
  auto d = den_.residue(set);
  if (!n || !d || *d == 0) return std::nullopt;
  return modp::mul(*n, modp::inv(*d));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  r.normalize();
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero();
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  auto ra = a.residue(0);
  auto rb = b.residue(0);
  if (ra && rb && *ra != *rb) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

BigRational RationalFunction::evaluate(const Assignment& at) const {
  BigRational d = den_.evaluate(at);
  if (d.is_zero()) throw VanishingDenominator();
  return num_.evaluate(at) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace aec
