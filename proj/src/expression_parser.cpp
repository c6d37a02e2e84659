#include "aec/expression_parser.hpp"

#include "aec/errors.hpp"

#include <cctype>

namespace aec {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  ParsedExpression run(std::optional<Domain> domain) {
    ExprTree tree = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    bool has_vars = false;
    for (const auto& p : literals_) has_vars = has_vars || !p.is_constant();
    Domain d = domain.value_or(has_vars ? Domain::Function : Domain::Rational);
    ParsedExpression out{std::move(tree), {}};
    for (const auto& p : literals_) out.values.push_back(Value::from_polynomial(p, d));
    return out;
  }

 private:
  ExprTree expr() {
    ExprTree lhs = term();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        Op op = text_[pos_] == '+' ? Op::Add : Op::Sub;
        ++pos_;
        lhs = ExprTree::node(op, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  ExprTree term() {
    ExprTree lhs = factor();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '/')) {
        Op op = text_[pos_] == '*' ? Op::Mul : Op::Div;
        ++pos_;
        lhs = ExprTree::node(op, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  ExprTree factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprTree inner = expr();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated '['");
      std::size_t start = pos_ + 1;
      pos_ = close + 1;
      return add_leaf(literal(text_.substr(start, close - start), start));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return add_leaf(literal(text_.substr(start, pos_ - start), start));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::size_t save = pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) fail("expected exponent");
      } else {
        pos_ = save;
      }
      return add_leaf(literal(text_.substr(start, pos_ - start), start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial literal(std::string_view text, std::size_t offset) {
    try {
      return Polynomial::parse(text);
    } catch (const ParseError& e) {
      throw ParseError("bad value literal '" + std::string(text) + "'", offset + e.position());
    }
  }

  ExprTree add_leaf(Polynomial p) {
    literals_.push_back(std::move(p));
    return ExprTree::leaf(literals_.size() - 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Polynomial> literals_;
};

}  // namespace

ParsedExpression parse_expression(std::string_view text, std::optional<Domain> domain) {
  return ExpressionParser(text).run(domain);
}

}  // namespace aec
