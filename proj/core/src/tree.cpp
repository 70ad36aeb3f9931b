#include "filling/tree.hpp"

#include <functional>

#include "filling/errors.hpp"

namespace filling {

void validate_tree(const RootedTree& t) {
  const int n = t.node_count();
  if (n == 0 || t.root < 0 || t.root >= n)
    throw ValidationError(ValidationError::Kind::Malformed, "tree root out of range");
  std::vector<int> seen(n, 0);
  std::function<void(int)> walk = [&](int v) {
    if (v < 0 || v >= n)
      throw ValidationError(ValidationError::Kind::Malformed, "tree child out of range");
    if (seen[v]++)
      throw ValidationError(ValidationError::Kind::Malformed, "tree node visited twice");
    const auto& node = t.nodes[static_cast<std::size_t>(v)];
    if ((node.left < 0) != (node.right < 0))
      throw ValidationError(ValidationError::Kind::Malformed,
                            "tree node with exactly one child");
    if (node.left >= 0) {
      walk(node.left);
      walk(node.right);
    }
  };
  walk(t.root);
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      throw ValidationError(ValidationError::Kind::Malformed, "unreachable tree node");
}

RootedTree complete_tree(int depth) {
  RootedTree t;
  std::function<int(int)> build = [&](int d) {
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    if (d > 0) {
      t.nodes[static_cast<std::size_t>(id)].left = build(d - 1);
      t.nodes[static_cast<std::size_t>(id)].right = build(d - 1);
    }
    return id;
  };
  t.root = build(depth);
  return t;
}

RootedTree random_full_tree(int n, std::mt19937_64& rng) {
  if (n < 1 || n % 2 == 0)
    throw ValidationError(ValidationError::Kind::Malformed,
                          "full binary tree needs an odd node count");
  RootedTree t;
  std::function<int(int)> build = [&](int size) {
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    if (size > 1) {
      // Left subtree gets any odd size in [1, size-2].
      int choices = (size - 1) / 2;
      int left = 1 + 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(choices));
      t.nodes[static_cast<std::size_t>(id)].left = build(left);
      t.nodes[static_cast<std::size_t>(id)].right = build(size - 1 - left);
    }
    return id;
  };
  t.root = build(n);
  return t;
}

namespace {

int parse_node(const std::string& s, std::size_t& i, RootedTree& t) {
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size() || s[i] != '(') throw ParseError("expected '('", i);
  ++i;
  int id = static_cast<int>(t.nodes.size());
  t.nodes.push_back({});
  skip_ws();
  if (i < s.size() && s[i] == '(') {
    int left = parse_node(s, i, t);
    int right = parse_node(s, i, t);
    t.nodes[static_cast<std::size_t>(id)].left = left;
    t.nodes[static_cast<std::size_t>(id)].right = right;
    skip_ws();
  }
  if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
  ++i;
  return id;
}

}  // namespace

RootedTree parse_tree(const std::string& text) {
  std::size_t i = 0;
  RootedTree t;
  t.root = parse_node(text, i, t);
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) throw ParseError("trailing input after tree", i);
  validate_tree(t);
  return t;
}

Forest parse_forest(const std::string& text) {
  Forest f;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    RootedTree t;
    t.root = parse_node(text, i, t);
    validate_tree(t);
    f.trees.push_back(std::move(t));
  }
  return f;
}

std::string render_tree(const RootedTree& t) {
  std::string out;
  std::function<void(int)> walk = [&](int v) {
    const auto& node = t.nodes[static_cast<std::size_t>(v)];
    out += '(';
    if (node.left >= 0) {
      walk(node.left);
      out += ' ';
      walk(node.right);
    }
    out += ')';
  };
  walk(t.root);
  return out;
}

std::string render_forest(const Forest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    out += render_tree(f.trees[i]);
  }
  return out;
}

}  // namespace filling
