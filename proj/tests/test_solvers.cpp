#include "doctest.h"

#include <algorithm>
#include <set>

#include "aec/errors.hpp"
#include "aec/oracle.hpp"
#include "aec/solver_ep.hpp"
#include "aec/solver_np.hpp"
#include "aec/solver_std.hpp"
#include "generators.hpp"

using namespace aec;

namespace {

Instance make(std::vector<long> values, long target, OpSet ops, Variant variant = Variant::Std) {
  Instance inst;
  for (long v : values) inst.values.emplace_back(v);
  inst.target = Value(target);
  inst.ops = ops;
  inst.variant = variant;
  return inst;
}

Instance make_ep(std::vector<long> values, long target, OpSet ops, TreeShape shape) {
  Instance inst = make(std::move(values), target, ops, Variant::EP);
  inst.shape = std::move(shape);
  return inst;
}

std::vector<long> random_values(testgen::Rng& rng, std::size_t n, long hi) {
  std::vector<long> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(testgen::uniform(rng, 1, hi));
  return v;
}

bool oracle_std(const Instance& inst) {
  bool hit = false;
  enumerate_std(inst.values, inst.ops, [&](const ExprTree&, const Value& v) { hit = hit || v == inst.target; });
  return hit;
}

bool oracle_np(const Instance& inst) {
  bool hit = false;
  enumerate_np(inst.values, inst.ops, [&](const FlatExpr&, const Value& v) { hit = hit || v == inst.target; });
  return hit;
}

bool oracle_ep(const Instance& inst) {
  bool hit = false;
  enumerate_ep(inst.values, inst.ops, *inst.shape,
               [&](const ExprTree&, const Value& v) { hit = hit || v == inst.target; });
  return hit;
}

std::set<std::string> texts(const std::vector<Value>& vs) {
  std::set<std::string> s;
  for (const auto& v : vs) s.insert(v.to_string());
  return s;
}

const OpSet kAll{Op::Add, Op::Sub, Op::Mul, Op::Div};

}  // namespace

TEST_CASE("std examples") {
  auto golden = make({11, 9, 4, 3, 1}, 98, kAll);
  auto r = solve_std(golden);
  REQUIRE(r.witness);
  CHECK(eval_tree(*r.witness, golden.values) == Value(98));
  CHECK(r.witness->uses_each_index_once(5));

  CHECK(solve_std(make({7}, 7, OpSet{Op::Div})).witness);
  CHECK_FALSE(solve_std(make({7}, 8, kAll)).witness);
  CHECK(solve_std(make({1, 1, 2, 12}, 24, kAll)).witness);
  CHECK_FALSE(solve_std(make({1, 1, 1}, 4, kAll)).witness);
  CHECK_THROWS_AS(solve_std(make({}, 1, kAll)), EmptyInstance);
}

TEST_CASE("std bound") {
  std::vector<long> many(13, 1);
  CHECK_THROWS_AS(solve_std(make(many, 13, OpSet{Op::Add})), BoundExceeded);
  SolverOptions wide;
  wide.max_values = 13;
  CHECK(solve_std(make(many, 13, OpSet{Op::Add}), wide).witness);
}

TEST_CASE("achievable values") {
  auto plus = make({3, 1}, 0, OpSet{Op::Add});
  CHECK(texts(achievable_values(plus, 0b11)) == std::set<std::string>{"4"});
  auto all = make({3, 1}, 0, kAll);
  CHECK(texts(achievable_values(all, 0b11)) == std::set<std::string>{"4", "2", "-2", "3", "1/3"});
  CHECK(texts(achievable_values(all, 0b01)) == std::set<std::string>{"3"});
}

TEST_CASE("property: commuted branches leave value sets unchanged") {
  testgen::Rng rng(31);
  SolverOptions commuted;
  commuted.commuted_branches = true;
  for (int i = 0; i < 40; ++i) {
    OpSet ops = OpSet::from_bits(static_cast<std::uint8_t>(testgen::uniform(rng, 1, 15)));
    auto inst = make(random_values(rng, 4, 6), 0, ops);
    REQUIRE(texts(achievable_values(inst, 0b1111)) == texts(achievable_values(inst, 0b1111, commuted)));
  }
}

TEST_CASE("property: std agrees with the oracle (n <= 5, values 1..6)") {
  testgen::Rng rng(32);
  for (int i = 0; i < 120; ++i) {
    auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 5));
    OpSet ops = OpSet::from_bits(static_cast<std::uint8_t>(testgen::uniform(rng, 1, 15)));
    auto inst = make(random_values(rng, n, 6), testgen::uniform(rng, -30, 60), ops);
    auto r = solve_std(inst);
    REQUIRE(r.witness.has_value() == oracle_std(inst));
    if (r.witness) REQUIRE(eval_tree(*r.witness, inst.values) == inst.target);
  }
}

TEST_CASE("std over polynomials") {
  Instance inst;
  for (const char* s : {"x", "y", "2"}) inst.values.push_back(Value::parse(s, Domain::Function));
  inst.target = Value::parse("2*x+2*y");
  inst.ops = OpSet{Op::Add, Op::Mul};
  auto r = solve_std(inst);
  REQUIRE(r.witness);
  CHECK(eval_tree(*r.witness, inst.values) == inst.target);
  inst.target = Value::parse("x+y+3", Domain::Function);
  CHECK_FALSE(solve_std(inst).witness);
}

TEST_CASE("std is thread-count independent") {
  auto golden = make({11, 9, 4, 3, 1}, 98, kAll);
  SolverOptions one, eight;
  eight.threads = 8;
  auto a = solve_std(golden, one), b = solve_std(golden, eight);
  CHECK(print_full_paren(*a.witness, golden.values) == print_full_paren(*b.witness, golden.values));
  CHECK(a.stats.nodes == b.stats.nodes);
  CHECK(a.stats.memo_entries == b.stats.memo_entries);
}

TEST_CASE("group values") {
  std::vector<Value> v{2, 3, 4};
  std::vector<std::size_t> idx{0, 1, 2};
  auto all = group_values(v, idx, OpSet{Op::Mul, Op::Div});
  std::vector<Value> vals;
  for (const auto& c : all) vals.push_back(c.value);
  CHECK(texts(vals) == std::set<std::string>{"24", "6", "8/3", "3/2", "2/3", "3/8", "1/6"});
  for (const auto& c : all) CHECK(eval_group(c.witness, v) == c.value);

  vals.clear();
  for (const auto& c : group_values(v, idx, OpSet{Op::Div})) vals.push_back(c.value);
  CHECK(texts(vals) == std::set<std::string>{"1/6", "3/8", "2/3"});

  vals.clear();
  for (const auto& c : group_values(v, idx, OpSet{Op::Mul})) vals.push_back(c.value);
  CHECK(texts(vals) == std::set<std::string>{"24"});

  std::vector<std::size_t> one{1};
  for (OpSet ops : OpSet::all_nonempty()) {
    auto g = group_values(v, one, ops);
    REQUIRE(g.size() == 1);
    CHECK(g[0].value == Value(3));
  }
  CHECK(group_values(v, idx, OpSet{Op::Add}).empty());

  std::vector<Value> z{0, 5};
  std::vector<std::size_t> both{0, 1};
  vals.clear();
  for (const auto& c : group_values(z, both, OpSet{Op::Mul, Op::Div})) vals.push_back(c.value);
  CHECK(texts(vals) == std::set<std::string>{"0"});
}

TEST_CASE("property: group values match brute force over numerator subsets") {
  testgen::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 5));
    std::vector<Value> v;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k) {
      v.emplace_back(testgen::uniform(rng, 0, 7));
      idx.push_back(k);
    }
    std::set<std::string> expected;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Value num(1), den(1);
      for (std::size_t k = 0; k < n; ++k) {
        if (mask >> k & 1) {
          num = num * v[k];
        } else {
          den = den * v[k];
        }
      }
      if (!den.is_zero()) expected.insert((num / den).to_string());
    }
    std::vector<Value> got;
    for (const auto& c : group_values(v, idx, OpSet{Op::Mul, Op::Div})) got.push_back(c.value);
    REQUIRE(got.size() == expected.size());
    REQUIRE(texts(got) == expected);
  }
}

TEST_CASE("np examples") {
  auto a = make({1, 2, 3}, 0, OpSet{Op::Add, Op::Sub}, Variant::NP);
  auto r = solve_np(a);
  REQUIRE(r.witness);
  CHECK(print_flat(*r.witness, a.values) == "1+2-3");

  auto b = make({2, 2, 4, 4}, 1, OpSet{Op::Mul, Op::Div}, Variant::NP);
  auto rb = solve_np(b);
  REQUIRE(rb.witness);
  CHECK(eval_flat(*rb.witness, b.values) == Value(1));

  for (OpSet ops : OpSet::all_nonempty()) CHECK(solve_np(make({7}, 7, ops, Variant::NP)).witness);

  // No precedence-free way to reach 9 from 1,2,3 with + and *.
  CHECK_FALSE(solve_np(make({1, 2, 3}, 9, OpSet{Op::Add, Op::Mul}, Variant::NP)).witness);
  CHECK(solve_std(make({1, 2, 3}, 9, OpSet{Op::Add, Op::Mul})).witness);

  CHECK_FALSE(solve_np(make({1, 2}, 3, OpSet{Op::Mul}, Variant::NP)).witness);
  CHECK_THROWS_AS(solve_np(make({}, 1, kAll, Variant::NP)), EmptyInstance);
}

TEST_CASE("np never leads with a minus") {
  auto inst = make({5, 3}, -8, OpSet{Op::Sub}, Variant::NP);
  CHECK_FALSE(solve_np(inst).witness);
  inst.target = Value(2);
  CHECK(solve_np(inst).witness);
}

TEST_CASE("property: np agrees with the oracle (n <= 5, values 1..6, targets -30..30)") {
  testgen::Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 5));
    OpSet ops = OpSet::from_bits(static_cast<std::uint8_t>(testgen::uniform(rng, 1, 15)));
    auto inst = make(random_values(rng, n, 6), testgen::uniform(rng, -30, 30), ops, Variant::NP);
    auto r = solve_np(inst);
    REQUIRE(r.witness.has_value() == oracle_np(inst));
    if (r.witness) {
      REQUIRE(eval_flat(*r.witness, inst.values) == inst.target);
      REQUIRE_NOTHROW(validate_flat(*r.witness, n, ops));
    }
  }
}

TEST_CASE("np over polynomials") {
  Instance inst;
  for (const char* s : {"2*x*y", "y", "2*x", "1"}) inst.values.push_back(Value::parse(s, Domain::Function));
  inst.target = Value::parse("4*x");
  inst.ops = OpSet{Op::Add, Op::Mul, Op::Div};
  inst.variant = Variant::NP;
  auto r = solve_np(inst);
  REQUIRE(r.witness);
  CHECK(eval_flat(*r.witness, inst.values) == inst.target);
}

TEST_CASE("single-op deciders") {
  CHECK(solve_single_op(make({1, 2, 3}, 6, OpSet{Op::Add}, Variant::NP)));
  auto d = make({12, 2, 3}, 2, OpSet{Op::Div}, Variant::NP);
  auto w = solve_single_op(d);
  REQUIRE(w);
  CHECK(eval_flat(*w, d.values) == Value(2));
  CHECK(print_flat(*w, d.values) == "12/2/3");
  CHECK_FALSE(solve_single_op(make({1, 2, 3}, 7, OpSet{Op::Sub}, Variant::NP)));
  CHECK(solve_single_op(make({1, 2, 3}, 0, OpSet{Op::Sub}, Variant::NP)));
  CHECK(solve_single_op(make({2, 3, 4}, 24, OpSet{Op::Mul}, Variant::NP)));
  CHECK(solve_single_op(make({0, 0}, 0, OpSet{Op::Div}, Variant::NP)) == std::nullopt);
  CHECK(solve_single_op(make({0, 5}, 0, OpSet{Op::Div}, Variant::NP)));
  CHECK_THROWS_AS(solve_single_op(make({1}, 1, OpSet{Op::Add, Op::Sub}, Variant::NP)), InvalidInstance);
}

TEST_CASE("property: single-op deciders agree with the general search (n <= 6)") {
  testgen::Rng rng(35);
  const OpSet singles[] = {OpSet{Op::Add}, OpSet{Op::Sub}, OpSet{Op::Mul}, OpSet{Op::Div}};
  for (int i = 0; i < 300; ++i) {
    auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 6));
    OpSet ops = singles[testgen::uniform(rng, 0, 3)];
    auto inst = make(random_values(rng, n, 6), 0, ops, Variant::NP);
    // Half the targets are reachable by construction.
    if (testgen::uniform(rng, 0, 1)) {
      enumerate_np(inst.values, ops, [&](const FlatExpr&, const Value& v) { inst.target = v; });
    } else {
      inst.target = Value(testgen::uniform(rng, -40, 40));
    }
    auto fast = solve_single_op(inst);
    REQUIRE(fast.has_value() == solve_np(inst).witness.has_value());
    if (fast) REQUIRE(eval_flat(*fast, inst.values) == inst.target);
  }
}

TEST_CASE("ep examples") {
  TreeShape balanced = TreeShape::comb_pair(2, 2);
  auto a = make_ep({1, 2, 3, 4}, 10, OpSet{Op::Add}, balanced);
  CHECK(solve_ep(a).witness);

  auto b = make_ep({1, 2, 3}, 0, OpSet{Op::Sub}, TreeShape::left_comb(3));
  auto rb = solve_ep(b);
  REQUIRE(rb.witness);
  CHECK(eval_tree(*rb.witness, b.values) == Value(0));
  CHECK(isomorphic(shape_of(*rb.witness), TreeShape::left_comb(3)));

  CHECK_FALSE(solve_ep(make_ep({1, 2, 3}, 5, OpSet{Op::Sub}, TreeShape::left_comb(3))).witness);
  CHECK_THROWS_AS(solve_ep(make_ep({1, 2, 3}, 5, OpSet{Op::Sub}, balanced)), LeafCountMismatch);

  // 2*3+5*7 needs the balanced shape.
  CHECK(solve_ep(make_ep({2, 3, 5, 7}, 41, OpSet{Op::Add, Op::Mul}, balanced)).witness);
  CHECK_FALSE(solve_ep(make_ep({2, 3, 5, 7}, 41, OpSet{Op::Add, Op::Mul}, TreeShape::left_comb(4))).witness);
}

TEST_CASE("ep two-comb catalog") {
  CHECK(shape_catalog(OpSet{Op::Div}, 4).code() == TreeShape::comb_pair(2, 2).code());
  CHECK(shape_catalog(OpSet{Op::Add, Op::Sub}, 5).code() == TreeShape::comb_pair(3, 2).code());
  CHECK(shape_catalog(OpSet{Op::Mul, Op::Div}, 2).code() == TreeShape::comb_pair(1, 1).code());
  CHECK_THROWS_AS(shape_catalog(OpSet{Op::Div}, 1), InvalidShape);
  CHECK_THROWS_AS(shape_catalog(OpSet{Op::Add}, 4), UnsupportedSpec);
}

TEST_CASE("ep division combs: child exchange crosses the comb boundary") {
  // No equal-product split of {16,2,2,2,2,1} into halves, yet the (3,3)
  // division comb reaches 1 once children may be exchanged.
  auto inst = make_ep({16, 2, 2, 2, 2, 1}, 1, OpSet{Op::Div}, TreeShape::comb_pair(3, 3));
  auto r = solve_ep(inst);
  REQUIRE(r.witness);
  CHECK(eval_tree(*r.witness, inst.values) == Value(1));
  SolverOptions ordered;
  ordered.ordered_shapes = true;
  CHECK_FALSE(solve_ep(inst, ordered).witness);
}

TEST_CASE("property: ep agrees with the filtered oracle (n <= 5, values 1..5, every shape)") {
  testgen::Rng rng(36);
  for (int i = 0; i < 120; ++i) {
    auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 5));
    auto shapes = TreeShape::all_unordered(n);
    OpSet ops = OpSet::from_bits(static_cast<std::uint8_t>(testgen::uniform(rng, 1, 15)));
    auto inst = make_ep(random_values(rng, n, 5), testgen::uniform(rng, -20, 40), ops,
                        shapes[testgen::uniform(rng, 0, long(shapes.size()) - 1)]);
    auto r = solve_ep(inst);
    REQUIRE(r.witness.has_value() == oracle_ep(inst));
    if (r.witness) REQUIRE(isomorphic(shape_of(*r.witness), *inst.shape));
  }
}

TEST_CASE("property: ep yes implies std yes") {
  testgen::Rng rng(37);
  for (int i = 0; i < 150; ++i) {
    auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 6));
    auto shapes = TreeShape::all_ordered(n);
    OpSet ops = OpSet::from_bits(static_cast<std::uint8_t>(testgen::uniform(rng, 1, 15)));
    auto inst = make_ep(random_values(rng, n, 6), testgen::uniform(rng, -10, 30), ops,
                        shapes[testgen::uniform(rng, 0, long(shapes.size()) - 1)]);
    if (!solve_ep(inst).witness) continue;
    inst.variant = Variant::Std;
    REQUIRE(solve_std(inst).witness);
  }
}

TEST_CASE("oracle counts") {
  std::vector<Value> one{Value(4)};
  CHECK(enumerate_std(one, kAll, [](const ExprTree&, const Value&) {}).streamed == 1);
  CHECK(enumerate_np(one, kAll, [](const FlatExpr&, const Value&) {}).streamed == 1);

  std::vector<Value> two{Value(1), Value(2)};
  int sums = 0;
  auto c2 = enumerate_std(two, OpSet{Op::Add}, [&](const ExprTree&, const Value& v) { sums += v == Value(3); });
  CHECK(c2.streamed == 2);
  CHECK(sums == 2);
  CHECK(enumerate_np(two, OpSet{Op::Add}, [](const FlatExpr&, const Value&) {}).streamed == 2);

  std::vector<Value> three{Value(1), Value(2), Value(3)};
  auto c3 = enumerate_std(three, kAll, [](const ExprTree&, const Value&) {});
  CHECK(c3.streamed + c3.skipped == 192);
  CHECK(c3.skipped == 0);
  CHECK(enumerate_np(three, OpSet{Op::Add, Op::Sub}, [](const FlatExpr&, const Value&) {}).streamed == 24);

  std::vector<Value> four{Value(1), Value(2), Value(3), Value(4)};
  CHECK(enumerate_ep(four, OpSet{Op::Add}, TreeShape::comb_pair(2, 2), [](const ExprTree&, const Value&) {})
            .streamed == 24);
  CHECK(enumerate_ep(four, OpSet{Op::Add}, TreeShape::left_comb(4), [](const ExprTree&, const Value&) {})
            .streamed == 96);
  CHECK(enumerate_ep(two, kAll, TreeShape::left_comb(2), [](const ExprTree&, const Value&) {}).streamed ==
        enumerate_std(two, kAll, [](const ExprTree&, const Value&) {}).streamed);

  std::vector<Value> zeros{Value(0), Value(1)};
  auto cz = enumerate_std(zeros, OpSet{Op::Div}, [](const ExprTree&, const Value&) {});
  CHECK(cz.streamed == 1);
  CHECK(cz.skipped == 1);

  std::vector<Value> seven(7, Value(1));
  CHECK_THROWS_AS(enumerate_std(seven, kAll, [](const ExprTree&, const Value&) {}), BoundExceeded);
}

TEST_CASE("property: oracle stream sizes follow the closed form") {
  // Catalan(n-1) * n! * |ops|^(n-1), with no zero values so nothing is skipped.
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14};
  const std::uint64_t fact[] = {1, 1, 2, 6, 24, 120};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Value> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(long(i + 1));
    for (OpSet ops : OpSet::all_nonempty()) {
      std::uint64_t labels = 1;
      for (std::size_t k = 1; k < n; ++k) labels *= ops.size();
      auto c = enumerate_std(v, ops, [](const ExprTree&, const Value&) {});
      REQUIRE(c.streamed + c.skipped == catalan[n - 1] * fact[n] * labels);
      auto f = enumerate_np(v, ops, [](const FlatExpr&, const Value&) {});
      REQUIRE(f.streamed + f.skipped == fact[n] * labels);
    }
  }
}
