#include "filling/shelling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "filling/errors.hpp"

namespace filling {

std::size_t smallest_first_pick(const std::vector<std::pair<int, long long>>& candidates) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i] < candidates[best]) best = i;
  return best;
}

namespace {

// Post-order subtree sizes for one tree.
std::vector<int> subtree_sizes(const RootedTree& t) {
  std::vector<int> size(t.nodes.size(), 0);
  std::function<int(int)> walk = [&](int v) -> int {
    const auto& node = t.nodes[static_cast<std::size_t>(v)];
    int s = 1;
    if (node.left >= 0) s += walk(node.left) + walk(node.right);
    size[static_cast<std::size_t>(v)] = s;
    return s;
  };
  walk(t.root);
  return size;
}

long long ref_key(NodeRef r) {
  return static_cast<long long>(r.tree) * (1LL << 32) + r.node;
}

}  // namespace

ShellingSchedule greedy_shell(const Forest& f) {
  for (const auto& t : f.trees) validate_tree(t);
  std::vector<std::vector<int>> sizes;
  sizes.reserve(f.trees.size());
  for (const auto& t : f.trees) sizes.push_back(subtree_sizes(t));

  std::vector<NodeRef> visible;
  for (std::size_t i = 0; i < f.trees.size(); ++i)
    visible.push_back({static_cast<int>(i), f.trees[i].root});

  ShellingSchedule out;
  while (!visible.empty()) {
    std::vector<std::pair<int, long long>> candidates;
    candidates.reserve(visible.size());
    for (NodeRef r : visible)
      candidates.emplace_back(sizes[static_cast<std::size_t>(r.tree)][static_cast<std::size_t>(r.node)],
                              ref_key(r));
    std::size_t pick = smallest_first_pick(candidates);
    NodeRef r = visible[pick];
    visible.erase(visible.begin() + static_cast<std::ptrdiff_t>(pick));
    const auto& node = f.trees[static_cast<std::size_t>(r.tree)].nodes[static_cast<std::size_t>(r.node)];
    if (node.left >= 0) {
      visible.push_back({r.tree, node.left});
      visible.push_back({r.tree, node.right});
    }
    out.steps.push_back(r);
    out.visible_after.push_back(static_cast<int>(visible.size()));
  }
  return out;
}

int visibility_of_schedule(const Forest& f, const ShellingSchedule& s) {
  for (const auto& t : f.trees) validate_tree(t);
  std::set<std::pair<int, int>> visible;
  for (std::size_t i = 0; i < f.trees.size(); ++i)
    visible.insert({static_cast<int>(i), f.trees[i].root});
  int max_visible = static_cast<int>(visible.size());
  for (NodeRef r : s.steps) {
    if (!visible.erase({r.tree, r.node}))
      throw ValidationError(ValidationError::Kind::BadSchedule,
                            "schedule removes a non-visible node");
    const auto& node = f.trees.at(static_cast<std::size_t>(r.tree))
                           .nodes.at(static_cast<std::size_t>(r.node));
    if (node.left >= 0) {
      visible.insert({r.tree, node.left});
      visible.insert({r.tree, node.right});
    }
    max_visible = std::max(max_visible, static_cast<int>(visible.size()));
  }
  if (!visible.empty())
    throw ValidationError(ValidationError::Kind::BadSchedule,
                          "schedule does not shell the whole forest");
  return max_visible;
}

namespace {

struct ShapeTable {
  std::unordered_map<std::string, int> intern;
  std::vector<std::pair<int, int>> children;  // (-1,-1) for a leaf

  int add(const RootedTree& t, int v) {
    const auto& node = t.nodes[static_cast<std::size_t>(v)];
    int a = -1, b = -1;
    std::string enc;
    if (node.left >= 0) {
      a = add(t, node.left);
      b = add(t, node.right);
      if (a > b) std::swap(a, b);  // shelling is blind to left/right order
      enc = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    } else {
      enc = "()";
    }
    auto it = intern.find(enc);
    if (it != intern.end()) return it->second;
    int id = static_cast<int>(children.size());
    intern.emplace(enc, id);
    children.emplace_back(a, b);
    return id;
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Can the multiset of shapes be completely shelled with at most beta trees
// visible at every moment (including now)?
bool can_shell(std::vector<int> state, int beta, const ShapeTable& shapes,
               std::unordered_map<std::vector<int>, bool, VecHash>& memo) {
  if (static_cast<int>(state.size()) > beta) return false;
  if (state.empty()) return true;
  auto it = memo.find(state);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (std::size_t i = 0; i < state.size() && !ok; ++i) {
    if (i > 0 && state[i] == state[i - 1]) continue;  // identical shape, same result
    std::vector<int> next = state;
    int shape = next[i];
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    auto [a, b] = shapes.children[static_cast<std::size_t>(shape)];
    if (a >= 0) {
      next.insert(std::lower_bound(next.begin(), next.end(), a), a);
      next.insert(std::lower_bound(next.begin(), next.end(), b), b);
    }
    ok = can_shell(std::move(next), beta, shapes, memo);
  }
  memo.emplace(std::move(state), ok);
  return ok;
}

}  // namespace

int exact_visibility(const Forest& f, int max_nodes) {
  for (const auto& t : f.trees) validate_tree(t);
  if (f.node_count() > max_nodes)
    throw BudgetError("exact_visibility: forest has " + std::to_string(f.node_count()) +
                      " nodes, guard is " + std::to_string(max_nodes));
  ShapeTable shapes;
  std::vector<int> state;
  for (const auto& t : f.trees) state.push_back(shapes.add(t, t.root));
  std::sort(state.begin(), state.end());
  for (int beta = std::max<int>(1, static_cast<int>(state.size()));; ++beta) {
    std::unordered_map<std::vector<int>, bool, VecHash> memo;
    if (can_shell(state, beta, shapes, memo)) return beta;
  }
}

int lemma1_bound(std::int64_t n) {
  if (n < 1)
    throw ValidationError(ValidationError::Kind::Malformed, "node count must be positive");
  // 2^d - 1 < n <= 2^(d+1) - 1 exactly when d = floor(log2 n).
  return std::bit_width(static_cast<std::uint64_t>(n));
}

double corollary1_bound(std::int64_t n) {
  return std::log2(static_cast<double>(n) + 1.0) + 1.0;
}

}  // namespace filling
