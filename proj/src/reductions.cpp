#include "aec/reductions.hpp"

#include "aec/errors.hpp"
#include "aec/solver_ep.hpp"

#include <algorithm>
#include <numeric>

namespace aec {

namespace {

std::string power(std::string_view var, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(k);
}

std::string times(const BigInt& c, const std::string& term) {
  if (term == "1") return c.get_str();
  if (c == 1) return term;
  return c.get_str() + "*" + term;
}

BigInt product(const std::vector<BigInt>& a) {
  BigInt p = 1;
  for (const auto& v : a) p *= v;
  return p;
}

Value poly(const std::string& text) { return Value::parse(text, Domain::Function); }

Value integer(const BigInt& v) { return Value::parse(v.get_str(), Domain::Rational); }

bool needs_root(const std::string& tag) {
  return tag == "2.1" || tag == "2.2" || tag == "2.5" || tag == "2.6" || tag == "2.7";
}

Instance trivial_no(const ReductionSpec& spec, const SourceInstance& s) {
  Instance inst;
  inst.values = {Value(1L)};
  inst.target = Value(2L);
  inst.ops = OpSet{Op::Add};
  inst.variant = spec.variant;
  if (spec.variant == Variant::EP) inst.shape = TreeShape::leaf();
  inst.provenance = "trivial-no stand-in for construction " + spec.tag + " from " + s.encode();
  return inst;
}

ExprTree comb(std::size_t first, const std::vector<std::pair<Op, std::size_t>>& rest) {
  ExprTree t = ExprTree::leaf(first);
  for (auto [op, i] : rest) t = ExprTree::node(op, t, ExprTree::leaf(i));
  return t;
}

/// Two left combs joined at the root. The first leaf of each comb is
/// fixed; the remaining items fill the left comb first. Each item carries
/// the op it takes in the left comb and the op it takes in the right one.
ExprTree two_combs(std::size_t n, Op root, std::size_t left_first, std::size_t right_first,
                   const std::vector<std::pair<std::size_t, std::pair<Op, Op>>>& items) {
  const std::size_t left_size = (n + 1) / 2;
  std::vector<std::pair<Op, std::size_t>> l, r;
  for (const auto& [idx, ops] : items) {
    if (l.size() + 1 < left_size) {
      l.emplace_back(ops.first, idx);
    } else {
      r.emplace_back(ops.second, idx);
    }
  }
  return ExprTree::node(root, comb(left_first, l), comb(right_first, r));
}

Group product_group(const std::vector<std::size_t>& num, const std::vector<std::size_t>& den) {
  Group g;
  g.lead = num.at(0);
  for (std::size_t k = 1; k < num.size(); ++k) g.tail.emplace_back(Op::Mul, num[k]);
  for (std::size_t d : den) g.tail.emplace_back(Op::Div, d);
  return g;
}

SourceWitness normalized(SourceWitness w) {
  for (auto& b : w) std::sort(b.begin(), b.end());
  bool two = w.size() == 2;
  if (two) {
    if (w[0].empty() || (!w[1].empty() && w[1][0] < w[0][0])) std::swap(w[0], w[1]);
  } else {
    std::sort(w.begin(), w.end());
  }
  return w;
}

/// +1 / -1 exponent (or sign) of every leaf of a tree built from a single
/// additive pair or a single multiplicative pair.
void polarity(const ExprTree& t, bool positive, std::vector<int>& out) {
  if (t.is_leaf()) {
    out[t.leaf_index()] = positive ? 1 : -1;
    return;
  }
  polarity(t.left(), positive, out);
  bool flip = t.op() == Op::Sub || t.op() == Op::Div;
  polarity(t.right(), flip ? !positive : positive, out);
}

[[noreturn]] void unexpected(const ReductionSpec& spec, const std::string& witness, const std::string& why) {
  throw WitnessShapeUnexpected("construction " + spec.tag + ": witness " + witness + " " + why);
}

}  // namespace

const std::vector<ReductionSpec>& reduction_catalog() {
  static const std::vector<ReductionSpec> catalog = {
      {"2.1", OpSet{Op::Add, Op::Div, Op::Mul}, Variant::NP, SourceKind::ProductPartitionHalf},
      {"2.2", OpSet{Op::Add, Op::Mul}, Variant::NP, SourceKind::ProductPartitionHalf},
      {"2.3", OpSet{Op::Sub, Op::Mul}, Variant::NP, SourceKind::ProductPartitionHalf},
      {"2.4", OpSet{Op::Add, Op::Sub, Op::Mul}, Variant::NP, SourceKind::ThreePartition3},
      {"2.5", OpSet{Op::Add, Op::Div}, Variant::NP, SourceKind::ProductPartitionHalf},
      {"2.6", OpSet{Op::Sub, Op::Div}, Variant::NP, SourceKind::ProductPartitionHalf},
      {"2.6", OpSet{Op::Add, Op::Sub, Op::Div}, Variant::NP, SourceKind::ProductPartitionHalf},
      {"2.7", OpSet{Op::Add, Op::Sub, Op::Mul, Op::Div}, Variant::NP, SourceKind::ProductPartitionHalf},
      {"2.7", OpSet{Op::Sub, Op::Mul, Op::Div}, Variant::NP, SourceKind::ProductPartitionHalf},
      {"2.8", OpSet{Op::Add, Op::Sub}, Variant::NP, SourceKind::Partition},
      {"2.9", OpSet{Op::Mul, Op::Div}, Variant::NP, SourceKind::ProductPartition},
      {"ep-div", OpSet{Op::Div}, Variant::EP, SourceKind::ProductPartitionHalf},
      {"ep-plus-minus", OpSet{Op::Add, Op::Sub}, Variant::EP, SourceKind::Partition},
      {"ep-times-div", OpSet{Op::Mul, Op::Div}, Variant::EP, SourceKind::ProductPartition},
  };
  return catalog;
}

std::vector<ReductionSpec> find_specs(std::string_view tag) {
  std::vector<ReductionSpec> out;
  for (const auto& s : reduction_catalog()) {
    if (s.tag == tag) out.push_back(s);
  }
  if (out.empty()) throw UnsupportedSpec("no construction tagged '" + std::string(tag) + "'");
  return out;
}

const ReductionSpec& find_spec(OpSet ops, Variant variant) {
  for (const auto& s : reduction_catalog()) {
    if (s.ops == ops && s.variant == variant) return s;
  }
  throw UnsupportedSpec("no construction for ops {" + ops.to_string() + "} and variant " + to_string(variant));
}

Instance reduce(const SourceInstance& s, const ReductionSpec& spec, bool force_trivial_no) {
  s.validate();
  if (s.kind != spec.source) {
    throw UnsupportedSpec("construction " + spec.tag + " reduces from " + to_string(spec.source) + ", not " +
                          to_string(s.kind));
  }
  const auto& a = s.values;
  const std::size_t n = a.size();
  const std::size_t h = n / 2;
  BigInt root = 0;
  if (needs_root(spec.tag)) {
    auto r = int_sqrt(product(a));
    if (!r) {
      if (force_trivial_no) return trivial_no(spec, s);
      throw NonSquareProduct("product " + product(a).get_str() + " of " + s.encode() + " is not a perfect square");
    }
    root = *r;
  }

  Instance inst;
  inst.ops = spec.ops;
  inst.variant = spec.variant;
  inst.provenance = "construction " + spec.tag + " from " + s.encode();
  auto& v = inst.values;
  const std::string& t = spec.tag;
  if (t == "2.1") {
    v.push_back(poly(times(a[0], "x")));
    for (std::size_t i = 1; i < n; ++i) v.push_back(poly(times(a[i], "x*y")));
    v.push_back(poly(power("y", h - 1)));
    v.push_back(poly(power("y", h)));
    inst.target = poly(times(2 * root, power("x", h)));
  } else if (t == "2.2") {
    for (const auto& ai : a) v.push_back(poly(times(ai, "x")));
    inst.target = poly(times(2 * root, power("x", h)));
  } else if (t == "2.3") {
    for (const auto& ai : a) v.push_back(poly(times(ai, "x")));
    v.push_back(poly("y"));
    v.push_back(poly("y"));
    inst.target = poly("0");
  } else if (t == "2.4") {
    for (const auto& ai : a) v.push_back(poly(times(ai, "x")));
    const std::size_t groups = n / 3;
    for (std::size_t j = 1; j <= groups; ++j) {
      for (int copy = 0; copy < 3; ++copy) v.push_back(poly("y" + std::to_string(j)));
    }
    BigRational c(std::accumulate(a.begin(), a.end(), BigInt(0)), BigInt(static_cast<unsigned long>(groups)));
    std::string text;
    for (std::size_t j = 1; j <= groups; ++j) {
      if (j > 1) text += "+";
      text += c.to_string() + "*x*y" + std::to_string(j);
    }
    inst.target = poly(text);
  } else if (t == "2.5") {
    v.push_back(poly(times(a[0], "x*y")));
    for (std::size_t i = 1; i < n; ++i) v.push_back(poly(times(a[i], "x")));
    v.push_back(poly(times(root, power("x", h))));
    v.push_back(poly(times(root, power("x", h) + "*y")));
    inst.target = poly("2");
  } else if (t == "2.6") {
    for (const auto& ai : a) v.push_back(poly(times(ai, "x")));
    v.push_back(poly(times(root, power("x", 2 * n))));
    v.push_back(poly(times(root, power("x", n))));
    inst.target = poly(power("x", 3 * h) + "-" + power("x", h));
  } else if (t == "2.7") {
    for (const auto& ai : a) v.push_back(poly(times(ai, "x")));
    v.push_back(poly(power("x", 2 * n)));
    v.push_back(poly(power("x", n)));
    inst.target = poly(times(root, power("x", 5 * h)) + "-" + times(root, power("x", 3 * h)));
  } else if (t == "2.8") {
    for (const auto& ai : a) v.push_back(integer(ai));
    inst.target = Value(0L);
  } else if (t == "2.9") {
    for (const auto& ai : a) v.push_back(integer(ai));
    inst.target = Value(1L);
  } else if (t == "ep-div" || t == "ep-plus-minus" || t == "ep-times-div") {
    for (const auto& ai : a) v.push_back(integer(ai));
    inst.target = Value(t == "ep-plus-minus" ? 0L : 1L);
    inst.shape = n == 1 ? TreeShape::leaf() : shape_catalog(spec.ops, n);
  } else {
    throw UnsupportedSpec("construction " + t + " is not implemented");
  }
  inst.validate();
  return inst;
}

std::string print_witness(const ExprWitness& w, const Instance& inst) {
  if (const auto* flat = std::get_if<FlatExpr>(&w)) return print_flat(*flat, inst.values);
  return print_full_paren(std::get<ExprTree>(w), inst.values);
}

ExprWitness witness_forward(const SourceInstance& s, const ReductionSpec& spec, const SourceWitness& w) {
  if (!is_source_witness(s, w)) {
    throw InvalidSourceWitness(format_witness(s, w) + " is not a certificate for " + s.encode());
  }
  const std::size_t n = s.values.size();
  const std::string& t = spec.tag;
  SourceWitness b = normalized(w);
  ExprWitness out;

  if (t == "2.4") {
    FlatExpr e;
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t c = 0; c < 3; ++c) {
        e.groups.push_back({Sign::Plus, product_group({b[j][c], n + 3 * j + c}, {})});
      }
    }
    out = e;
  } else if (t == "2.8") {
    FlatExpr e;
    for (std::size_t i : b[0]) e.groups.push_back({Sign::Plus, Group{i, {}}});
    for (std::size_t i : b[1]) e.groups.push_back({Sign::Minus, Group{i, {}}});
    out = e;
  } else if (t == "2.9") {
    FlatExpr e;
    e.groups.push_back({Sign::Plus, product_group(b[0], b[1])});
    out = e;
  } else if (t.starts_with("2.")) {
    // Two products over the halves; b[0] holds a_1.
    FlatExpr e;
    const auto& p = b[0];
    const auto& q = b[1];
    if (t == "2.1") {
      e.groups.push_back({Sign::Plus, product_group(p, {n})});
      e.groups.push_back({Sign::Plus, product_group(q, {n + 1})});
    } else if (t == "2.2") {
      e.groups.push_back({Sign::Plus, product_group(p, {})});
      e.groups.push_back({Sign::Plus, product_group(q, {})});
    } else if (t == "2.3") {
      std::vector<std::size_t> p1 = p, q1 = q;
      p1.push_back(n);
      q1.push_back(n + 1);
      e.groups.push_back({Sign::Plus, product_group(p1, {})});
      e.groups.push_back({Sign::Minus, product_group(q1, {})});
    } else if (t == "2.5") {
      e.groups.push_back({Sign::Plus, product_group({n + 1}, p)});
      e.groups.push_back({Sign::Plus, product_group({n}, q)});
    } else if (t == "2.6") {
      e.groups.push_back({Sign::Plus, product_group({n}, p)});
      e.groups.push_back({Sign::Minus, product_group({n + 1}, q)});
    } else if (t == "2.7") {
      std::vector<std::size_t> p1{n}, q1{n + 1};
      p1.insert(p1.end(), p.begin(), p.end());
      q1.insert(q1.end(), q.begin(), q.end());
      e.groups.push_back({Sign::Plus, product_group(p1, {})});
      e.groups.push_back({Sign::Minus, product_group(q1, {})});
    } else {
      throw UnsupportedSpec("construction " + t + " is not implemented");
    }
    out = e;
  } else if (n == 1) {
    out = ExprTree::leaf(0);
  } else if (t == "ep-div") {
    // (p / D\d0...) / (d0 / N\p...) = prod N / prod D
    std::vector<std::pair<Op, std::size_t>> l, r;
    for (std::size_t k = 1; k < b[1].size(); ++k) l.emplace_back(Op::Div, b[1][k]);
    for (std::size_t k = 1; k < b[0].size(); ++k) r.emplace_back(Op::Div, b[0][k]);
    out = ExprTree::node(Op::Div, comb(b[0][0], l), comb(b[1][0], r));
  } else if (t == "ep-plus-minus" || t == "ep-times-div") {
    const bool additive = t == "ep-plus-minus";
    const Op same = additive ? Op::Add : Op::Mul;
    const Op flip = additive ? Op::Sub : Op::Div;
    std::vector<std::pair<std::size_t, std::pair<Op, Op>>> items;
    if (b[1].empty()) {
      // Every value on the numerator side: all ones.
      for (std::size_t k = 2; k < b[0].size(); ++k) items.push_back({b[0][k], {same, same}});
      out = two_combs(n, same, b[0][0], b[0][1], items);
    } else {
      for (std::size_t k = 1; k < b[0].size(); ++k) items.push_back({b[0][k], {same, flip}});
      for (std::size_t k = 1; k < b[1].size(); ++k) items.push_back({b[1][k], {flip, same}});
      out = two_combs(n, flip, b[0][0], b[1][0], items);
    }
  } else {
    throw UnsupportedSpec("construction " + t + " is not implemented");
  }

  Instance inst = reduce(s, spec);
  Value got = std::holds_alternative<FlatExpr>(out) ? eval_flat(std::get<FlatExpr>(out), inst.values)
                                                    : eval_tree(std::get<ExprTree>(out), inst.values);
  if (!(got == inst.target)) {
    throw Error("internal error: forward witness " + print_witness(out, inst) + " misses the target of construction " +
                t);
  }
  if (const auto* flat = std::get_if<FlatExpr>(&out)) validate_flat(*flat, inst.values.size(), inst.ops);
  if (const auto* tree = std::get_if<ExprTree>(&out)) {
    if (!isomorphic(shape_of(*tree), *inst.shape)) throw Error("internal error: forward witness has the wrong shape");
  }
  return out;
}

SourceWitness witness_backward(const SourceInstance& s, const ReductionSpec& spec, const ExprWitness& w) {
  Instance inst = reduce(s, spec);
  const std::size_t n = s.values.size();
  const std::string text = print_witness(w, inst);
  Value got;
  try {
    got = std::holds_alternative<FlatExpr>(w) ? eval_flat(std::get<FlatExpr>(w), inst.values)
                                              : eval_tree(std::get<ExprTree>(w), inst.values);
  } catch (const DivisionByZero&) {
    throw InvalidInstance("witness " + text + " divides by zero");
  }
  if (!(got == inst.target)) throw InvalidInstance("witness " + text + " does not attain the target");

  const std::string& t = spec.tag;
  SourceWitness blocks;
  if (const auto* tree = std::get_if<ExprTree>(&w)) {
    std::vector<int> pol(n, 0);
    polarity(*tree, true, pol);
    blocks.resize(2);
    for (std::size_t i = 0; i < n; ++i) blocks[pol[i] > 0 ? 0 : 1].push_back(i);
  } else {
    const FlatExpr& e = std::get<FlatExpr>(w);
    if (t == "2.8") {
      blocks.resize(2);
      for (const auto& g : e.groups) {
        for (std::size_t i : g.group.indices()) blocks[g.sign == Sign::Plus ? 0 : 1].push_back(i);
      }
    } else if (t == "2.9") {
      if (e.groups.size() != 1) unexpected(spec, text, "has more than one product");
      blocks.resize(2);
      blocks[0].push_back(e.groups[0].group.lead);
      for (auto [op, i] : e.groups[0].group.tail) blocks[op == Op::Mul ? 0 : 1].push_back(i);
    } else if (t == "2.4") {
      // Each run holds one y_j; its a_i go to block j.
      blocks.resize(n / 3);
      for (const auto& g : e.groups) {
        std::vector<std::size_t> as;
        std::optional<std::size_t> y;
        for (std::size_t i : g.group.indices()) {
          if (i < n) {
            as.push_back(i);
          } else if (y) {
            unexpected(spec, text, "has a run with two y factors");
          } else {
            y = (i - n) / 3;
          }
        }
        if (!y && !as.empty()) unexpected(spec, text, "has a run without a y factor");
        for (std::size_t i : as) blocks[*y].push_back(i);
      }
    } else {
      for (const auto& g : e.groups) {
        std::vector<std::size_t> as;
        for (std::size_t i : g.group.indices()) {
          if (i < n) as.push_back(i);
        }
        if (!as.empty()) blocks.push_back(std::move(as));
      }
      if (blocks.size() != 2) {
        unexpected(spec, text, "spreads the a_i over " + std::to_string(blocks.size()) + " runs instead of 2");
      }
    }
  }
  blocks = normalized(std::move(blocks));
  if (!is_source_witness(s, blocks)) {
    unexpected(spec, text, "induces " + format_witness(s, blocks) + ", which is not a certificate");
  }
  return blocks;
}

}  // namespace aec
