#include "aec/ops.hpp"

#include "aec/errors.hpp"

#include <bit>

namespace aec {

char symbol(Op op) {
  switch (op) {
    case Op::Add: return '+';
    case Op::Sub: return '-';
    case Op::Mul: return '*';
    case Op::Div: return '/';
  }
  return '?';
}

bool is_commutative(Op op) { return op == Op::Add || op == Op::Mul; }
bool is_additive(Op op) { return op == Op::Add || op == Op::Sub; }

Value apply(Op op, const Value& left, const Value& right) {
  switch (op) {
    case Op::Add: return left + right;
    case Op::Sub: return left - right;
    case Op::Mul: return left * right;
    case Op::Div: return left / right;
  }
  throw Error("unknown operator");
}

OpSet::OpSet(std::initializer_list<Op> ops) {
  for (Op op : ops) bits_ |= bit(op);
}

OpSet OpSet::from_bits(std::uint8_t bits) {
  OpSet s;
  s.bits_ = bits & 0x0f;
  return s;
}

OpSet OpSet::parse(std::string_view text) {
  OpSet s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+') {
      s.bits_ |= bit(Op::Add);
    } else if (c == '-') {
      s.bits_ |= bit(Op::Sub);
    } else if (c == '*' || c == 'x') {
      s.bits_ |= bit(Op::Mul);
    } else if (c == '/') {
      s.bits_ |= bit(Op::Div);
    } else if (c == ' ' || c == ',') {
      continue;
    } else if (text.substr(i, 3) == "−") {
      s.bits_ |= bit(Op::Sub);
      i += 2;
    } else if (text.substr(i, 2) == "×") {
      s.bits_ |= bit(Op::Mul);
      i += 1;
    } else if (text.substr(i, 2) == "÷") {
      s.bits_ |= bit(Op::Div);
      i += 1;
    } else {
      throw ParseError("unknown operator '" + std::string(1, c) + "'", i);
    }
  }
  if (s.empty()) throw ParseError("empty operator set", 0);
  return s;
}

std::vector<OpSet> OpSet::all_nonempty() {
  std::vector<OpSet> out;
  for (std::uint8_t b = 1; b < 16; ++b) out.push_back(from_bits(b));
  return out;
}

std::size_t OpSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Op> OpSet::ops() const {
  std::vector<Op> out;
  for (Op op : kAllOps) {
    if (contains(op)) out.push_back(op);
  }
  return out;
}

std::string OpSet::to_string() const {
  std::string out;
  for (Op op : ops()) out += symbol(op);
  return out;
}

}  // namespace aec
