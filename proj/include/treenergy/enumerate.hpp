#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "treenergy/tree.hpp"

namespace treenergy {

/// Hard ceiling for isomorphism-class enumeration (documented cap: 16).
inline constexpr int kEnumerationCap = 16;

/// Visit one representative of every isomorphism class of trees on n
/// vertices. Representatives are emitted in a fixed deterministic order,
/// already in canonical labeling. Throws for n < 1 or n > kEnumerationCap.
void for_each_tree(int n, const std::function<void(const Tree&)>& visit);

std::vector<Tree> enumerate_trees(int n);

/// One representative per isomorphism class of trees on n vertices whose
/// maximum degree is exactly `delta`, attained by exactly two vertices.
std::vector<Tree> enumerate_constrained_trees(int n, int delta);

/// Visit every labeled tree on n vertices (all n^(n-2) Prufer sequences).
/// Exhaustive and slow; exists as the independent cross-check for the
/// level-sequence enumerator. Practical up to n ~ 10.
void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& visit);

/// Decode a Prufer sequence (length n-2, entries in 0..n-1) into edges.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq);

/// Number of isomorphism classes of trees on n vertices via full Prufer
/// enumeration plus canonical dedup.
std::int64_t count_trees_prufer(int n);

}  // namespace treenergy
