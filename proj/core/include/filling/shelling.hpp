#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "filling/tree.hpp"

namespace filling {

/// Identifies a node of a forest: index of the tree in the input forest
/// plus node id within that tree's arena.
struct NodeRef {
  int tree;
  int node;
  auto operator<=>(const NodeRef&) const = default;
};

/// An ordered sequence of elementary shellings ending with the empty
/// forest.  visible_after[k] is the number of visible (root) vertices after
/// the k-th removal; the initial root count is not stored but counts toward
/// the visibility number.
struct ShellingSchedule {
  std::vector<NodeRef> steps;
  std::vector<int> visible_after;
};

/// Position of the lexicographically smallest (size, tiebreak) candidate.
/// Shared policy: shell a smallest subtree first, breaking ties by
/// canonical index.
std::size_t smallest_first_pick(const std::vector<std::pair<int, long long>>& candidates);

/// Complete shelling that always removes the root of a tree with the least
/// number of nodes (ties by smaller canonical index).  For a single tree
/// with N nodes its visibility number is at most d+1 where
/// 2^d - 1 < N <= 2^(d+1) - 1.
ShellingSchedule greedy_shell(const Forest& f);

/// Maximum number of simultaneously visible vertices over the replayed
/// schedule, counting the initial visible set.  Throws ValidationError if a
/// step removes a non-visible node or the schedule is not a complete
/// shelling of f.
int visibility_of_schedule(const Forest& f, const ShellingSchedule& s);

/// True minimum visibility number over all complete shellings, by
/// exhaustive search (iterative deepening with memoization on the multiset
/// of visible subtree shapes, which is result-identical to plain search).
/// Refuses forests larger than max_nodes.
int exact_visibility(const Forest& f, int max_nodes = 17);

/// d+1 for the unique d with 2^d - 1 < n <= 2^(d+1) - 1.
int lemma1_bound(std::int64_t n);

/// The real-valued bound log2(n+1) + 1; every visibility number is
/// strictly below it.
double corollary1_bound(std::int64_t n);

}  // namespace filling
