#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace filling {

/// A finite rooted tree in which every node has zero or two children
/// (root valence two, internal nodes valence three, leaves valence one).
/// Node count is therefore odd.
struct RootedTree {
  struct Node {
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Throws ValidationError unless the arena describes a single full binary
/// tree reachable from the root with each node referenced exactly once.
void validate_tree(const RootedTree& t);

struct Forest {
  std::vector<RootedTree> trees;

  int node_count() const {
    int n = 0;
    for (const auto& t : trees) n += t.node_count();
    return n;
  }
};

/// The complete rooted tree of depth d, with 2^(d+1)-1 nodes.
RootedTree complete_tree(int depth);

/// Seeded random full binary tree with n nodes (n odd), by recursive
/// uniform choice of the left subtree size.  Deterministic per seed.
RootedTree random_full_tree(int n, std::mt19937_64& rng);

/// Nested-parenthesis interchange form: "()" is a leaf, "(L R)" an internal
/// node; forests are whitespace-separated trees.
RootedTree parse_tree(const std::string& text);
Forest parse_forest(const std::string& text);
std::string render_tree(const RootedTree& t);
std::string render_forest(const Forest& f);

}  // namespace filling
