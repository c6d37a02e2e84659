#include "aec/polynomial.hpp"

#include "aec/errors.hpp"
#include "aec/modular.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace aec {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& [name, exp] : factors) {
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == name) {
      factors_.back().second += exp;
    } else {
      factors_.emplace_back(std::move(name), exp);
    }
  }
}

Monomial Monomial::variable(std::string name, std::uint32_t exponent) {
  return Monomial({{std::move(name), exponent}});
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : factors_) {
    if (n == name) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  for (const auto& [name, exp] : factors_) {
    std::uint32_t d = exp - o.exponent(name);
    if (d > 0) r.factors_.emplace_back(name, d);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (const auto& [name, exp] : a.factors_) {
    std::uint32_t e = std::min(exp, b.exponent(name));
    if (e > 0) r.factors_.emplace_back(name, e);
  }
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [name, exp] : factors_) {
    if (!out.empty()) out += '*';
    out += name;
    if (exp != 1) out += '^' + std::to_string(exp);
  }
  return out;
}

Polynomial::Polynomial(const BigRational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const BigRational& coef, Monomial m) {
  if (!coef.is_zero()) terms_.emplace(std::move(m), coef);
}

Polynomial Polynomial::variable(std::string name) {
  return Polynomial(BigRational(1), Monomial::variable(std::move(name)));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigRational Polynomial::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? BigRational{} : it->second;
}

std::vector<std::string> Polynomial::variables() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) names.insert(f.first);
  }
  return {names.begin(), names.end()};
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.sign() > 0; });
}

Monomial Polynomial::monomial_content() const {
  auto it = terms_.begin();
  Monomial g = it->first;
  for (++it; it != terms_.end() && !g.is_one(); ++it) g = Monomial::gcd(g, it->first);
  return g;
}

BigRational Polynomial::content() const {
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    BigInt n = c.num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    BigInt d = c.den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  if (num_gcd == 0) return BigRational(1);
  return BigRational(num_gcd, den_lcm);
}

void Polynomial::add_term(const Monomial& m, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  if (c.is_zero()) return {};
  Polynomial r = *this;
  for (auto& [m, coef] : r.terms_) coef *= c;
  return r;
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono.divided_by(m), c);
  return r;
}

BigRational Polynomial::evaluate(const Assignment& at) const {
  BigRational sum;
  for (const auto& [m, c] : terms_) {
    BigRational term = c;
    for (const auto& [name, exp] : m.factors()) {
      auto it = at.find(name);
      if (it == at.end()) throw MissingVariable(name);
      mpq_class power;
      mpz_pow_ui(power.get_num_mpz_t(), it->second.raw().get_num_mpz_t(), exp);
      mpz_pow_ui(power.get_den_mpz_t(), it->second.raw().get_den_mpz_t(), exp);
      term *= BigRational(BigInt(power.get_num()), BigInt(power.get_den()));
    }
    sum += term;
  }
  return sum;
}

std::optional<std::uint64_t> Polynomial::residue(int set) const {
  std::uint64_t sum = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t den = mod_u64(c.den(), modp::kPrime);
    if (den == 0) return std::nullopt;
    std::uint64_t term = modp::mul(mod_u64(c.num(), modp::kPrime), modp::inv(den));
    for (const auto& [name, exp] : m.factors()) term = modp::mul(term, modp::pow(modp::point(name, set), exp));
    sum = modp::add(sum, term);
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, ties in ascending name order.
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return a->first.degree() > b->first.degree(); });
  std::string out;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    BigRational c = t->second;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (m.is_one()) {
      out += c.to_string();
    } else if (c == BigRational(1)) {
      out += m.to_string();
    } else {
      out += c.to_string() + '*' + m.to_string();
    }
  }
  return out;
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("empty value literal", pos_);
    Polynomial result;
    bool first = true;
    while (true) {
      skip_space();
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        negative = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial term = parse_term();
      result += negative ? -term : term;
      first = false;
    }
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    BigRational coef(1);
    std::vector<Monomial::Factor> factors;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("expected factor", pos_);
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        BigInt num = parse_digits();
        BigInt den = 1;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') {
          ++pos_;
          skip_space();
          den = parse_digits();
          if (den == 0) throw ParseError("zero denominator", pos_);
        }
        coef *= BigRational(num, den);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = parse_identifier();
        std::uint32_t exp = 1;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_space();
          std::size_t at = pos_;
          BigInt e = parse_digits();
          if (!e.fits_uint_p()) throw ParseError("exponent too large", at);
          exp = static_cast<std::uint32_t>(e.get_ui());
        }
        factors.emplace_back(std::move(name), exp);
      } else {
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
      }
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial(coef, Monomial(std::move(factors)));
  }

  BigInt parse_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string parse_identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return LiteralParser(text).parse(); }

}  // namespace aec
