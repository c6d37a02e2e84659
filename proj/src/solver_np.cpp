#include "aec/solver_np.hpp"

#include "aec/errors.hpp"
#include "aec/modular.hpp"

#include <memory>
#include <unordered_map>
#include <unordered_set>

namespace aec {

namespace {

using Counts = std::vector<std::uint32_t>;

/// Distinct input values with their multiplicities. A state is a
/// sub-multiset, encoded as a mixed-radix integer.
struct Types {
  std::vector<Value> value;
  std::vector<std::vector<std::size_t>> indices;
  std::vector<std::uint32_t> weight;

  explicit Types(std::span<const Value> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::size_t j = 0;
      while (j < value.size() && !(value[j] == values[i])) ++j;
      if (j == value.size()) {
        value.push_back(values[i]);
        indices.emplace_back();
      }
      indices[j].push_back(i);
    }
    std::uint32_t w = 1;
    for (const auto& idx : indices) {
      weight.push_back(w);
      w *= static_cast<std::uint32_t>(idx.size() + 1);
    }
  }

  std::size_t size() const { return value.size(); }
  std::uint32_t count(std::size_t j) const { return static_cast<std::uint32_t>(indices[j].size()); }

  std::uint32_t full() const {
    std::uint32_t k = 0;
    for (std::size_t j = 0; j < size(); ++j) k += count(j) * weight[j];
    return k;
  }

  Counts decode(std::uint32_t key) const {
    Counts c(size());
    for (std::size_t j = 0; j < size(); ++j) c[j] = (key / weight[j]) % (count(j) + 1);
    return c;
  }

  std::uint32_t encode(const Counts& c) const {
    std::uint32_t k = 0;
    for (std::size_t j = 0; j < size(); ++j) k += c[j] * weight[j];
    return k;
  }

  Value exact(const Counts& num, const Counts& den) const {
    Value v = value[0] - value[0];
    bool first = true;
    for (std::size_t j = 0; j < size(); ++j) {
      for (std::uint32_t k = 0; k < num[j]; ++k) {
        v = first ? value[j] : v * value[j];
        first = false;
      }
    }
    for (std::size_t j = 0; j < size(); ++j) {
      for (std::uint32_t k = 0; k < den[j]; ++k) v = v / value[j];
    }
    return v;
  }
};

/// Calls fn(sub) for every sub-multiset sub <= bound in mixed-radix order,
/// restricted to sub[first] >= min_first.
template <class Fn>
void for_each_sub(const Counts& bound, std::size_t first, std::uint32_t min_first, Fn&& fn) {
  Counts sub(bound.size(), 0);
  sub[first] = min_first;
  if (min_first > bound[first]) return;
  while (true) {
    fn(sub);
    std::size_t j = 0;
    for (; j < bound.size(); ++j) {
      if (sub[j] < bound[j]) {
        ++sub[j];
        break;
      }
      sub[j] = (j == first) ? min_first : 0;
    }
    if (j == bound.size()) return;
  }
}

struct ResidueField {
  using Scalar = std::uint64_t;
  static constexpr bool kExact = false;
  std::vector<std::uint64_t> type_residue;
  Scalar target = 0;

  static Scalar add(Scalar a, Scalar b) { return modp::add(a, b); }
  static Scalar sub(Scalar a, Scalar b) { return modp::sub(a, b); }
  static bool is_zero(Scalar a) { return a == 0; }
  static std::size_t hash(Scalar a) { return a; }
  static bool eq(Scalar a, Scalar b) { return a == b; }

  Scalar group(const Types&, const Counts& num, const Counts& den) const {
    std::uint64_t n = 1, d = 1;
    for (std::size_t j = 0; j < num.size(); ++j) {
      for (std::uint32_t k = 0; k < num[j]; ++k) n = modp::mul(n, type_residue[j]);
      for (std::uint32_t k = 0; k < den[j]; ++k) d = modp::mul(d, type_residue[j]);
    }
    return modp::mul(n, modp::inv(d));
  }
};

struct ExactField {
  using Scalar = Value;
  static constexpr bool kExact = true;
  Scalar target;

  static Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  static bool is_zero(const Scalar& a) { return a.is_zero(); }
  static std::size_t hash(const Scalar& a) { return a.fingerprint(); }
  static bool eq(const Scalar& a, const Scalar& b) { return a == b; }

  Scalar group(const Types& types, const Counts& num, const Counts& den) const { return types.exact(num, den); }
};

/// Depth-first search over signed groups. Each step takes a block that
/// contains the first remaining value type, so every partition is visited
/// once. Failures are memoized on (remaining multiset, residual, seen +).
/// Once at most `lookup_size_` values remain, the residual is looked up in
/// a bottom-up table of every sum the remaining values can still produce.
/// With residues, a match is confirmed exactly on the full expression; a
/// subtree that met a false match is not memoized.
template <class F>
class Search {
  using S = typename F::Scalar;

 public:
  Search(const Instance& inst, const Types& types, F field) : inst_(inst), types_(types), field_(std::move(field)) {
    zero_type_.resize(types.size());
    for (std::size_t j = 0; j < types.size(); ++j) zero_type_[j] = types.value[j].is_zero();
    const std::uint32_t keys = types.full() + 1;
    cache_.resize(keys);
    tables_[0].resize(keys);
    tables_[1].resize(keys);
    size_.resize(keys);
    for (std::uint32_t k = 0; k < keys; ++k) {
      std::uint32_t total = 0;
      for (auto c : types.decode(k)) total += c;
      size_[k] = total;
    }
    lookup_size_ = (inst.values.size() + 1) / 2;
  }

  std::optional<FlatExpr> run(SolveStats& stats) {
    S target = field_.target;
    dfs(types_.full(), target, false, true);
    stats.nodes += nodes_;
    stats.memo_entries += memo_.size() + table_entries_;
    return found_;
  }

 private:
  enum class Outcome { Found, Fail, Tainted };

  struct Cand {
    std::uint32_t num;
    S value;
  };

  struct Step {
    Sign sign;
    std::uint32_t block;
    std::uint32_t num;
  };

  struct MemoKey {
    std::uint32_t state;
    bool plus;
    S residual;
    bool operator==(const MemoKey& o) const {
      return state == o.state && plus == o.plus && F::eq(residual, o.residual);
    }
  };

  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
      return modp::mix(F::hash(k.residual) ^ (std::uint64_t{k.state} << 1 | k.plus));
    }
  };

  struct ScalarHash {
    std::size_t operator()(const S& s) const { return F::hash(s); }
  };
  struct ScalarEq {
    bool operator()(const S& a, const S& b) const { return F::eq(a, b); }
  };

  /// Every sum reachable from one (state, seen +) pair, with the first step
  /// that produced it and the sum left for the rest.
  struct Table {
    struct Entry {
      Step step;
      S rest;
    };
    std::vector<S> sums;
    std::vector<Entry> back;
    std::unordered_map<S, std::uint32_t, ScalarHash, ScalarEq> index;
  };

  bool can_plus(bool plus) const { return inst_.ops.contains(Op::Add) || !plus; }
  bool can_minus() const { return inst_.ops.contains(Op::Sub); }

  /// Calls fn(block key, candidate) for every admissible first group of `state`.
  template <class Fn>
  void for_each_group(std::uint32_t state, Fn&& fn) {
    Counts remaining = types_.decode(state);
    std::size_t first = 0;
    while (remaining[first] == 0) ++first;
    const bool additive = inst_.ops.has_additive();
    const bool multiplicative = inst_.ops.has_multiplicative();
    bool stop = false;
    for_each_sub(remaining, first, 1, [&](const Counts& block) {
      if (stop) return;
      std::uint32_t bkey = types_.encode(block);
      if (!additive && bkey != state) return;
      if (!multiplicative && size_[bkey] != 1) return;
      for (const Cand& c : candidates(bkey, block)) {
        if (fn(bkey, c)) {
          stop = true;
          return;
        }
      }
    });
  }

  const Table& table(std::uint32_t state, bool plus) {
    auto& slot = tables_[plus][state];
    if (slot) return *slot;
    auto t = std::make_unique<Table>();
    auto add = [&](S sum, Step step, const S& rest) {
      if (t->index.contains(sum)) return;
      t->index.emplace(sum, static_cast<std::uint32_t>(t->sums.size()));
      t->sums.push_back(std::move(sum));
      t->back.push_back({step, rest});
    };
    if (state == 0) {
      if (plus) add(F::sub(field_.target, field_.target), Step{}, S{});
    } else {
      for_each_group(state, [&](std::uint32_t bkey, const Cand& c) {
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
          if (sign == Sign::Plus ? !can_plus(plus) : !can_minus()) continue;
          const Table& rest = table(state - bkey, plus || sign == Sign::Plus);
          for (const S& r : rest.sums) {
            ++nodes_;
            add(sign == Sign::Plus ? F::add(r, c.value) : F::sub(r, c.value), Step{sign, bkey, c.num}, r);
          }
        }
        return false;
      });
    }
    table_entries_ += t->sums.size();
    slot = std::move(t);
    return *slot;
  }

  /// Appends the steps that realize `sum` from (state, plus) to the path.
  void replay(std::uint32_t state, bool plus, S sum) {
    while (state != 0) {
      const Table& t = table(state, plus);
      const auto& e = t.back[t.index.at(sum)];
      path_.push_back(e.step);
      state -= e.step.block;
      plus = plus || e.step.sign == Sign::Plus;
      sum = e.rest;
    }
  }

  Outcome dfs(std::uint32_t state, const S& residual, bool plus, bool lookup) {
    ++nodes_;
    if (state == 0) {
      if (!plus || !F::is_zero(residual)) return Outcome::Fail;
      return confirm() ? Outcome::Found : Outcome::Tainted;
    }
    if (lookup && size_[state] <= lookup_size_) {
      const Table& t = table(state, plus);
      if (!t.index.contains(residual)) return Outcome::Fail;
      std::size_t depth = path_.size();
      replay(state, plus, residual);
      bool ok = confirm();
      path_.resize(depth);
      if (ok) return Outcome::Found;
      // False match: search this subtree without the table.
      lookup = false;
    }
    MemoKey key{state, plus, residual};
    if (memo_.contains(key)) return Outcome::Fail;

    bool tainted = false;
    bool found = false;
    for_each_group(state, [&](std::uint32_t bkey, const Cand& c) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        if (sign == Sign::Plus ? !can_plus(plus) : !can_minus()) continue;
        path_.push_back({sign, bkey, c.num});
        S next = sign == Sign::Plus ? F::sub(residual, c.value) : F::add(residual, c.value);
        Outcome r = dfs(state - bkey, next, plus || sign == Sign::Plus, lookup);
        path_.pop_back();
        if (r == Outcome::Found) {
          found = true;
          return true;
        }
        if (r == Outcome::Tainted) tainted = true;
      }
      return false;
    });
    if (found) return Outcome::Found;
    if (tainted) return Outcome::Tainted;
    memo_.insert(std::move(key));
    return Outcome::Fail;
  }

  const std::vector<Cand>& candidates(std::uint32_t bkey, const Counts& block) {
    auto& slot = cache_[bkey];
    if (slot) return *slot;
    slot = std::make_unique<std::vector<Cand>>();
    auto& out = *slot;
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
    std::vector<Value> exact;  // residue mode: exact values, filled on demand
    auto add = [&](const Counts& num) {
      Counts den(block.size());
      for (std::size_t j = 0; j < block.size(); ++j) {
        den[j] = block[j] - num[j];
        if (den[j] > 0 && zero_type_[j]) return;
      }
      S v = field_.group(types_, num, den);
      auto& bucket = seen[F::hash(v)];
      for (std::size_t i : bucket) {
        if (!F::eq(out[i].value, v)) continue;
        if constexpr (F::kExact) {
          return;
        } else {
          if (types_.exact(num, den) == exact_of(out[i], block)) return;
        }
      }
      bucket.push_back(out.size());
      out.push_back({types_.encode(num), std::move(v)});
    };
    const bool mul = inst_.ops.contains(Op::Mul);
    const bool div = inst_.ops.contains(Op::Div);
    if (mul && div) {
      Counts zero(block.size(), 0);
      for_each_sub(block, 0, 0, [&](const Counts& num) {
        if (num != zero) add(num);
      });
    } else if (mul) {
      add(block);
    } else if (div) {
      for (std::size_t j = 0; j < block.size(); ++j) {
        if (block[j] == 0) continue;
        Counts num(block.size(), 0);
        num[j] = 1;
        add(num);
      }
    } else {
      add(block);
    }
    return out;
  }

  Value exact_of(const Cand& c, const Counts& block) const {
    Counts num = types_.decode(c.num);
    Counts den(block.size());
    for (std::size_t j = 0; j < block.size(); ++j) den[j] = block[j] - num[j];
    return types_.exact(num, den);
  }

  /// Turns the current path into a witness and checks it exactly.
  bool confirm() {
    FlatExpr e = build();
    try {
      if (eval_flat(e, inst_.values) == inst_.target) {
        found_ = std::move(e);
        return true;
      }
    } catch (const DivisionByZero&) {
    }
    return false;
  }

  FlatExpr build() const {
    std::vector<std::size_t> used(types_.size(), 0);
    auto take = [&](std::size_t j) { return types_.indices[j][used[j]++]; };
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      if (path_[i].sign == Sign::Plus) {
        order.push_back(i);
        break;
      }
    }
    for (std::size_t i = 0; i < path_.size(); ++i) {
      if (order.empty() || i != order[0]) order.push_back(i);
    }
    FlatExpr e;
    for (std::size_t i : order) {
      const Step& s = path_[i];
      Counts block = types_.decode(s.block);
      Counts num = types_.decode(s.num);
      std::vector<std::size_t> nums, dens;
      for (std::size_t j = 0; j < types_.size(); ++j) {
        for (std::uint32_t k = 0; k < num[j]; ++k) nums.push_back(take(j));
      }
      for (std::size_t j = 0; j < types_.size(); ++j) {
        for (std::uint32_t k = num[j]; k < block[j]; ++k) dens.push_back(take(j));
      }
      SignedGroup g;
      g.sign = s.sign;
      g.group.lead = nums[0];
      for (std::size_t k = 1; k < nums.size(); ++k) g.group.tail.emplace_back(Op::Mul, nums[k]);
      for (std::size_t d : dens) g.group.tail.emplace_back(Op::Div, d);
      e.groups.push_back(std::move(g));
    }
    return e;
  }

  const Instance& inst_;
  const Types& types_;
  F field_;
  std::vector<bool> zero_type_;
  std::vector<std::unique_ptr<std::vector<Cand>>> cache_;
  std::vector<std::unique_ptr<Table>> tables_[2];
  std::vector<std::uint32_t> size_;
  std::size_t lookup_size_ = 0;
  std::uint64_t table_entries_ = 0;
  std::unordered_set<MemoKey, MemoHash> memo_;
  std::vector<Step> path_;
  std::optional<FlatExpr> found_;
  std::uint64_t nodes_ = 0;
};

/// First point set on which every value and the target have residues and
/// no nonzero value vanishes.
std::optional<ResidueField> residue_field(const Instance& inst, const Types& types) {
  for (int set = 0; set < modp::kPointSets; ++set) {
    auto t = inst.target.residue(set);
    if (!t) continue;
    ResidueField f;
    f.target = *t;
    bool ok = true;
    for (const Value& v : types.value) {
      auto r = v.residue(set);
      if (!r || (*r == 0) != v.is_zero()) {
        ok = false;
        break;
      }
      f.type_residue.push_back(*r);
    }
    if (ok) return f;
  }
  return std::nullopt;
}

}  // namespace

std::vector<GroupCandidate> group_values(std::span<const Value> values, std::span<const std::size_t> indices,
                                         OpSet ops) {
  std::vector<GroupCandidate> out;
  const std::size_t k = indices.size();
  if (k == 0) return out;
  if (k > 20) throw BoundExceeded("group_values is limited to 20 values");
  std::unordered_multimap<std::uint64_t, std::size_t> seen;
  auto add = [&](std::uint32_t num_mask) {
    Group g;
    bool lead_set = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(num_mask >> i & 1)) continue;
      if (!lead_set) {
        g.lead = indices[i];
        lead_set = true;
      } else {
        g.tail.emplace_back(Op::Mul, indices[i]);
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (num_mask >> i & 1) continue;
      if (values[indices[i]].is_zero()) return;
      g.tail.emplace_back(Op::Div, indices[i]);
    }
    Value v = eval_group(g, values);
    auto [lo, hi] = seen.equal_range(v.fingerprint());
    for (auto it = lo; it != hi; ++it) {
      if (out[it->second].value == v) return;
    }
    seen.emplace(v.fingerprint(), out.size());
    out.push_back({std::move(v), std::move(g)});
  };
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1);
  const bool mul = ops.contains(Op::Mul);
  const bool div = ops.contains(Op::Div);
  if (mul && div) {
    for (std::uint32_t m = 1; m <= all; ++m) add(m);
  } else if (mul) {
    add(all);
  } else if (div) {
    for (std::size_t i = 0; i < k; ++i) add(std::uint32_t{1} << i);
  } else if (k == 1) {
    add(1);
  }
  return out;
}

NpResult solve_np(const Instance& inst, const SolverOptions& options) {
  inst.validate();
  const std::size_t n = inst.values.size();
  if (n > options.max_values_np) {
    throw BoundExceeded("no-parenthesis search is limited to " + std::to_string(options.max_values_np) +
                        " values, instance has " + std::to_string(n));
  }
  Types types(inst.values);
  NpResult result;
  if (auto field = residue_field(inst, types)) {
    result.witness = Search<ResidueField>(inst, types, std::move(*field)).run(result.stats);
  } else {
    result.witness = Search<ExactField>(inst, types, ExactField{inst.target}).run(result.stats);
  }
  if (result.witness) validate_flat(*result.witness, n, inst.ops);
  return result;
}

std::optional<FlatExpr> solve_single_op(const Instance& inst) {
  inst.validate();
  if (!inst.ops.is_singleton()) throw InvalidInstance("solve_single_op needs exactly one operator");
  const std::size_t n = inst.values.size();
  const auto& a = inst.values;
  Op op = inst.ops.ops()[0];

  auto single_group = [&](std::size_t lead, Op tail_op) {
    FlatExpr e;
    SignedGroup g;
    g.group.lead = lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != lead) g.group.tail.emplace_back(tail_op, i);
    }
    e.groups.push_back(std::move(g));
    return e;
  };

  switch (op) {
    case Op::Add: {
      Value sum = a[0];
      for (std::size_t i = 1; i < n; ++i) sum = sum + a[i];
      if (!(sum == inst.target)) return std::nullopt;
      FlatExpr e;
      for (std::size_t i = 0; i < n; ++i) e.groups.push_back({Sign::Plus, Group{i, {}}});
      return e;
    }
    case Op::Mul: {
      Value prod = a[0];
      for (std::size_t i = 1; i < n; ++i) prod = prod * a[i];
      if (!(prod == inst.target)) return std::nullopt;
      return single_group(0, Op::Mul);
    }
    case Op::Sub: {
      Value sum = a[0];
      for (std::size_t i = 1; i < n; ++i) sum = sum + a[i];
      for (std::size_t i = 0; i < n; ++i) {
        // a_i - (sum - a_i)
        if (!(a[i] + a[i] - sum == inst.target)) continue;
        FlatExpr e;
        e.groups.push_back({Sign::Plus, Group{i, {}}});
        for (std::size_t k = 0; k < n; ++k) {
          if (k != i) e.groups.push_back({Sign::Minus, Group{k, {}}});
        }
        return e;
      }
      return std::nullopt;
    }
    case Op::Div: {
      // prefix[i] = prod a[0..i), suffix[i] = prod a[i..n)
      Value one = Value::parse("1", inst.domain());
      std::vector<Value> prefix(n + 1, one), suffix(n + 1, one);
      for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * a[i];
      for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * a[i];
      for (std::size_t i = 0; i < n; ++i) {
        Value others = prefix[i] * suffix[i + 1];
        if (others.is_zero()) continue;
        if (a[i] / others == inst.target) return single_group(i, Op::Div);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace aec
