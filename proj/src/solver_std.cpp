#include "aec/solver_std.hpp"

#include "aec/errors.hpp"
#include "aec/parallel.hpp"
#include "value_table.hpp"

namespace aec {

namespace {

struct Back {
  std::uint32_t left_mask = 0;  // 0 marks a leaf
  std::uint32_t left_entry = 0;
  std::uint32_t right_entry = 0;
  Op op = Op::Add;
  bool swapped = false;  // right-mask value is the first operand
};

using Set = detail::ValueSet<Back>;

class StdSolver {
 public:
  StdSolver(const Instance& inst, const SolverOptions& options) : inst_(inst), options_(options) {
    inst.validate();
    n_ = inst.values.size();
    if (n_ > options.max_values || n_ > 31) {
      throw BoundExceeded("standard search is limited to " + std::to_string(options.max_values) +
                          " values, instance has " + std::to_string(n_));
    }
    sets_.resize(std::size_t{1} << n_);
    for (std::size_t i = 0; i < n_; ++i) sets_[std::size_t{1} << i].insert(inst.values[i], Back{});
  }

  /// Fills every mask with popcount <= k.
  void fill_up_to(std::size_t k) {
    auto strata = detail::masks_by_popcount(n_);
    unsigned threads = options_.threads == 0 ? default_threads() : options_.threads;
    for (std::size_t size = 2; size <= k; ++size) {
      const auto& masks = strata[size];
      std::vector<std::uint64_t> nodes(masks.size(), 0);
      parallel_for(masks.size(), threads, [&](std::size_t i) { nodes[i] = combine(masks[i]); });
      for (std::size_t i = 0; i < masks.size(); ++i) {
        stats_.nodes += nodes[i];
        stats_.memo_entries += sets_[masks[i]].size();
      }
    }
  }

  StdResult solve() {
    const std::uint32_t full = full_mask();
    if (n_ == 1) {
      StdResult r;
      if (inst_.values[0] == inst_.target) r.witness = ExprTree::leaf(0);
      return r;
    }
    fill_up_to(n_ - 1);
    StdResult result;
    for (std::uint32_t left = (0u - full) & full; left != full; left = (left - full) & full) {
      std::uint32_t right = full ^ left;
      if (left > right) continue;
      const Set& ls = sets_[left];
      const Set& rs = sets_[right];
      for (std::uint32_t li = 0; li < ls.size(); ++li) {
        for (Op op : inst_.ops.ops()) {
          for (bool left_first : {true, false}) {
            if (!left_first && is_commutative(op)) continue;
            ++stats_.nodes;
            auto req = detail::required_operand(op, left_first, ls.value(li), inst_.target);
            if (auto ri = detail::satisfy(rs, req)) {
              ExprTree l = rebuild(left, li);
              ExprTree r = rebuild(right, *ri);
              result.witness = left_first ? ExprTree::node(op, l, r) : ExprTree::node(op, r, l);
              result.stats = stats_;
              return result;
            }
          }
        }
      }
    }
    result.stats = stats_;
    return result;
  }

  std::vector<Value> values_for(std::uint32_t mask) {
    if (mask == 0 || mask > full_mask()) throw InvalidInstance("mask must select a nonempty subset");
    fill_up_to(static_cast<std::size_t>(__builtin_popcount(mask)));
    return sets_[mask].values();
  }

 private:
  std::uint32_t full_mask() const { return static_cast<std::uint32_t>((std::size_t{1} << n_) - 1); }

  std::uint64_t combine(std::uint32_t mask) {
    Set& out = sets_[mask];
    std::uint64_t nodes = 0;
    for (std::uint32_t left = (0u - mask) & mask; left != mask; left = (left - mask) & mask) {
      std::uint32_t right = mask ^ left;
      if (left > right) continue;
      const Set& ls = sets_[left];
      const Set& rs = sets_[right];
      for (std::uint32_t li = 0; li < ls.size(); ++li) {
        for (std::uint32_t ri = 0; ri < rs.size(); ++ri) {
          const Value& l = ls.value(li);
          const Value& r = rs.value(ri);
          for (Op op : inst_.ops.ops()) {
            ++nodes;
            if (!(op == Op::Div && r.is_zero())) out.insert(apply(op, l, r), Back{left, li, ri, op, false});
            if (is_commutative(op) && !options_.commuted_branches) continue;
            ++nodes;
            if (!(op == Op::Div && l.is_zero())) out.insert(apply(op, r, l), Back{left, li, ri, op, true});
          }
        }
      }
    }
    return nodes;
  }

  ExprTree rebuild(std::uint32_t mask, std::uint32_t entry) const {
    const Back& b = sets_[mask].back(entry);
    if (b.left_mask == 0) return ExprTree::leaf(static_cast<std::size_t>(__builtin_ctz(mask)));
    ExprTree l = rebuild(b.left_mask, b.left_entry);
    ExprTree r = rebuild(mask ^ b.left_mask, b.right_entry);
    return b.swapped ? ExprTree::node(b.op, r, l) : ExprTree::node(b.op, l, r);
  }

  const Instance& inst_;
  SolverOptions options_;
  std::size_t n_ = 0;
  std::vector<Set> sets_;
  SolveStats stats_;
};

}  // namespace

StdResult solve_std(const Instance& inst, const SolverOptions& options) {
  StdResult r = StdSolver(inst, options).solve();
  if (r.witness && !(eval_tree(*r.witness, inst.values) == inst.target)) {
    throw Error("internal error: standard witness does not reach the target");
  }
  return r;
}

std::vector<Value> achievable_values(const Instance& inst, std::uint32_t mask, const SolverOptions& options) {
  return StdSolver(inst, options).values_for(mask);
}

}  // namespace aec
