#include "aec/solver_ep.hpp"

#include "aec/errors.hpp"
#include "aec/parallel.hpp"
#include "value_table.hpp"

#include <map>

namespace aec {

namespace {

struct Back {
  std::uint32_t left_mask = 0;
  std::uint32_t left_entry = 0;
  std::uint32_t right_entry = 0;
  Op op = Op::Add;
  bool swapped = false;
};

using Set = detail::ValueSet<Back>;

/// Distinct subshape, children in canonical order (ordered mode keeps the
/// given order).
struct ShapeNode {
  std::size_t leaves = 1;
  int first = -1;
  int second = -1;
};

class EpSolver {
 public:
  EpSolver(const Instance& inst, const SolverOptions& options) : inst_(inst), options_(options) {
    inst.validate();
    if (inst.variant != Variant::EP) throw InvalidInstance("solve_ep needs an enforced-parenthesis instance");
    n_ = inst.values.size();
    if (n_ > options.max_values || n_ > 31) {
      throw BoundExceeded("enforced-parenthesis search is limited to " + std::to_string(options.max_values) +
                          " values, instance has " + std::to_string(n_));
    }
    root_ = intern(*inst.shape);
    strata_ = detail::masks_by_popcount(n_);
    rank_.assign(std::size_t{1} << n_, 0);
    for (const auto& stratum : strata_) {
      for (std::size_t i = 0; i < stratum.size(); ++i) rank_[stratum[i]] = static_cast<std::uint32_t>(i);
    }
    tables_.resize(nodes_.size());
  }

  EpResult solve() {
    EpResult result;
    if (n_ == 1) {
      if (inst_.values[0] == inst_.target) result.witness = ExprTree::leaf(0);
      return result;
    }
    fill();
    const ShapeNode& root = nodes_[static_cast<std::size_t>(root_)];
    const std::uint32_t full = static_cast<std::uint32_t>((std::size_t{1} << n_) - 1);
    bool twins = root.first == root.second && !options_.ordered_shapes;
    for (std::uint32_t left : strata_[nodes_[static_cast<std::size_t>(root.first)].leaves]) {
      if ((left & full) != left) continue;
      std::uint32_t right = full ^ left;
      if (twins && left > right) continue;
      const Set& ls = set(root.first, left);
      const Set& rs = set(root.second, right);
      for (std::uint32_t li = 0; li < ls.size(); ++li) {
        for (Op op : inst_.ops.ops()) {
          for (bool left_first : {true, false}) {
            if (!left_first && (is_commutative(op) || options_.ordered_shapes)) continue;
            ++stats_.nodes;
            auto req = detail::required_operand(op, left_first, ls.value(li), inst_.target);
            if (auto ri = detail::satisfy(rs, req)) {
              ExprTree l = rebuild(root.first, left, li);
              ExprTree r = rebuild(root.second, right, *ri);
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

 private:
  int intern(const TreeShape& s) {
    const std::string& key = options_.ordered_shapes ? s.ordered_code() : s.code();
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    ShapeNode node;
    node.leaves = s.leaf_count();
    if (!s.is_leaf()) {
      int a = intern(s.first());
      int b = intern(s.second());
      if (!options_.ordered_shapes) {
        const auto& ka = nodes_[static_cast<std::size_t>(a)];
        const auto& kb = nodes_[static_cast<std::size_t>(b)];
        bool swap = kb.leaves < ka.leaves || (kb.leaves == ka.leaves && codes_[static_cast<std::size_t>(b)] <
                                                                             codes_[static_cast<std::size_t>(a)]);
        if (swap) std::swap(a, b);
      }
      node.first = a;
      node.second = b;
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    codes_.push_back(key);
    ids_.emplace(key, id);
    return id;
  }

  const Set& set(int node, std::uint32_t mask) const {
    return tables_[static_cast<std::size_t>(node)][rank_[mask]];
  }

  void fill() {
    unsigned threads = options_.threads == 0 ? default_threads() : options_.threads;
    // Subshape ids are assigned children-first, so increasing id order is a
    // valid evaluation order; process by leaf count for clarity.
    std::vector<int> order;
    for (std::size_t k = 1; k < n_; ++k) {
      for (std::size_t id = 0; id < nodes_.size(); ++id) {
        if (nodes_[id].leaves == k && static_cast<int>(id) != root_) order.push_back(static_cast<int>(id));
      }
    }
    for (int id : order) {
      const ShapeNode& node = nodes_[static_cast<std::size_t>(id)];
      const auto& masks = strata_[node.leaves];
      auto& table = tables_[static_cast<std::size_t>(id)];
      table.assign(masks.size(), Set{});
      if (node.first < 0) {
        for (std::size_t i = 0; i < masks.size(); ++i) {
          table[i].insert(inst_.values[static_cast<std::size_t>(__builtin_ctz(masks[i]))], Back{});
        }
        continue;
      }
      std::vector<std::uint64_t> nodes(masks.size(), 0);
      parallel_for(masks.size(), threads, [&](std::size_t i) { nodes[i] = combine(node, masks[i], table[i]); });
      for (std::size_t i = 0; i < masks.size(); ++i) {
        stats_.nodes += nodes[i];
        stats_.memo_entries += table[i].size();
      }
    }
  }

  std::uint64_t combine(const ShapeNode& node, std::uint32_t mask, Set& out) const {
    std::uint64_t count = 0;
    bool twins = node.first == node.second && !options_.ordered_shapes;
    std::size_t k1 = nodes_[static_cast<std::size_t>(node.first)].leaves;
    for (std::uint32_t left = (0u - mask) & mask; left != mask; left = (left - mask) & mask) {
      if (static_cast<std::size_t>(__builtin_popcount(left)) != k1) continue;
      std::uint32_t right = mask ^ left;
      if (twins && left > right) continue;
      const Set& ls = set(node.first, left);
      const Set& rs = set(node.second, right);
      for (std::uint32_t li = 0; li < ls.size(); ++li) {
        for (std::uint32_t ri = 0; ri < rs.size(); ++ri) {
          const Value& l = ls.value(li);
          const Value& r = rs.value(ri);
          for (Op op : inst_.ops.ops()) {
            ++count;
            if (!(op == Op::Div && r.is_zero())) out.insert(apply(op, l, r), Back{left, li, ri, op, false});
            if (options_.ordered_shapes || (is_commutative(op) && !options_.commuted_branches)) continue;
            ++count;
            if (!(op == Op::Div && l.is_zero())) out.insert(apply(op, r, l), Back{left, li, ri, op, true});
          }
        }
      }
    }
    return count;
  }

  ExprTree rebuild(int node_id, std::uint32_t mask, std::uint32_t entry) const {
    const ShapeNode& node = nodes_[static_cast<std::size_t>(node_id)];
    if (node.first < 0) return ExprTree::leaf(static_cast<std::size_t>(__builtin_ctz(mask)));
    const Back& b = set(node_id, mask).back(entry);
    ExprTree l = rebuild(node.first, b.left_mask, b.left_entry);
    ExprTree r = rebuild(node.second, mask ^ b.left_mask, b.right_entry);
    return b.swapped ? ExprTree::node(b.op, r, l) : ExprTree::node(b.op, l, r);
  }

  const Instance& inst_;
  SolverOptions options_;
  std::size_t n_ = 0;
  std::vector<ShapeNode> nodes_;
  std::vector<std::string> codes_;
  std::map<std::string, int> ids_;
  int root_ = -1;
  std::vector<std::vector<std::uint32_t>> strata_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::vector<Set>> tables_;
  SolveStats stats_;
};

}  // namespace

EpResult solve_ep(const Instance& inst, const SolverOptions& options) {
  EpResult r = EpSolver(inst, options).solve();
  if (r.witness) {
    if (!isomorphic(shape_of(*r.witness), *inst.shape, options.ordered_shapes) ||
        !(eval_tree(*r.witness, inst.values) == inst.target)) {
      throw Error("internal error: enforced-parenthesis witness failed its check");
    }
  }
  return r;
}

TreeShape shape_catalog(OpSet ops, std::size_t n) {
  if (!(ops == OpSet{Op::Div} || ops == OpSet{Op::Add, Op::Sub} || ops == OpSet{Op::Mul, Op::Div})) {
    throw UnsupportedSpec("no explicit enforced parenthesization for ops {" + ops.to_string() + "}");
  }
  if (n < 2) throw InvalidShape("a two-comb shape needs at least two leaves");
  return TreeShape::comb_pair((n + 1) / 2, n / 2);
}

}  // namespace aec
