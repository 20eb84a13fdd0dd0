#pragma once

#include <compare>
#include <string>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

/// Canonical AHU parenthesis string of a tree: rooted at the center, children
/// sorted lexicographically; for two centers the smaller of the two strings.
/// Each vertex contributes one "(" so the code determines the order.
struct TreeCode {
  std::string bytes;

  int order() const;
  friend auto operator<=>(const TreeCode&, const TreeCode&) = default;
};

/// Throws std::invalid_argument unless t is a tree.
TreeCode canonical_code(const Graph& t);

/// Rebuilds a tree from a code; vertex 0 is the root and children are numbered
/// in preorder. Throws std::invalid_argument on a malformed code.
Graph tree_from_code(const TreeCode& code);

/// One representative per isomorphism class, sorted by code, each labeled as
/// tree_from_code labels it. 1 <= n <= 12.
std::vector<Graph> enumerate_trees(int n);

/// Codes of the trees returned by enumerate_trees, same order.
std::vector<TreeCode> enumerate_tree_codes(int n);

/// Generation routes behind enumerate_trees, exposed for cross-checking.
std::vector<TreeCode> tree_codes_from_prufer(int n);
std::vector<TreeCode> tree_codes_by_leaf_extension(int n);

/// Labeled tree on 0..n-1 encoded by a Prüfer sequence of length n-2.
Graph tree_from_prufer(const std::vector<int>& sequence, int n);

/// At most one vertex of degree > 1; true for n in {1, 2}.
bool is_star(const Graph& t);
bool has_induced_p4(const Graph& t);

}  // namespace decycle
