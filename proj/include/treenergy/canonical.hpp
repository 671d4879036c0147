#pragma once

#include <string>
#include <vector>

#include "treenergy/tree.hpp"

namespace treenergy {

/// The 1 or 2 central vertices (eccentricity minimizers), by leaf pruning.
std::vector<int> tree_centers(const Tree& t);

/// AHU code of the tree rooted at `root`: "(" + sorted child codes + ")".
std::string rooted_code(const Tree& t, int root);

/// Canonical form of a free tree: the lexicographically smaller rooted code
/// over its centers. Equal codes <=> isomorphic trees.
std::string canonical_code(const Tree& t);

bool isomorphic(const Tree& a, const Tree& b);

/// Deterministic isomorphism-invariant relabeling: vertices numbered in
/// preorder of the canonical rooted form, children visited in sorted code
/// order. Two isomorphic trees relabel to identical edge lists.
Tree canonical_relabel(const Tree& t);

}  // namespace treenergy
