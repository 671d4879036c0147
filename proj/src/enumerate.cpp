#include "treenergy/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "treenergy/canonical.hpp"

namespace treenergy {

namespace {

void check_order(int n) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > kEnumerationCap)
        throw std::invalid_argument("enumeration capped at n = " +
                                    std::to_string(kEnumerationCap) + ", got " +
                                    std::to_string(n));
}

// Rooted trees on n vertices as canonical level sequences, generated in
// reverse lexicographic order: start from the path (1,2,...,n); the successor
// truncates at the last entry p with L[p] > 2 and tiles the tail with the
// segment starting at p's parent position.
template <class F>
void for_each_rooted_level_sequence(int n, F&& emit) {
    std::vector<int> levels(n);
    for (int i = 0; i < n; ++i) levels[i] = i + 1;
    for (;;) {
        emit(levels);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) return;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[i] == levels[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
    }
}

Tree tree_from_levels(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // parent of i: nearest j < i one level up
    for (int i = 1; i < n; ++i)
        for (int j = i - 1; j >= 0; --j)
            if (levels[j] == levels[i] - 1) {
                edges.emplace_back(j, i);
                break;
            }
    return Tree(n, std::move(edges));
}

}  // namespace

void for_each_tree(int n, const std::function<void(const Tree&)>& visit) {
    check_order(n);
    if (n == 1) {
        visit(Tree(1, {}));
        return;
    }
    std::unordered_set<std::string> seen;
    for_each_rooted_level_sequence(n, [&](const std::vector<int>& levels) {
        Tree t = tree_from_levels(levels);
        if (seen.insert(canonical_code(t)).second) visit(canonical_relabel(t));
    });
}

std::vector<Tree> enumerate_trees(int n) {
    std::vector<Tree> out;
    for_each_tree(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

std::vector<Tree> enumerate_constrained_trees(int n, int delta) {
    if (delta < 3) throw std::invalid_argument("constrained enumeration needs Delta >= 3");
    std::vector<Tree> out;
    for_each_tree(n, [&](const Tree& t) {
        if (t.max_degree() == delta && t.count_degree(delta) == 2) out.push_back(t);
    });
    return out;
}

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n) throw std::invalid_argument("prufer entry out of range");
        ++degree[v];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // smallest-leaf decode with a rolling pointer; ptr only moves forward
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;  // freed vertex below the pointer becomes the next leaf
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& visit) {
    check_order(n);
    if (n == 1) {
        visit(Tree(1, {}));
        return;
    }
    if (n == 2) {
        visit(Tree(2, {{0, 1}}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        visit(Tree(n, prufer_decode(seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) return;
        ++seq[i];
    }
}

std::int64_t count_trees_prufer(int n) {
    check_order(n);
    if (n <= 2) return 1;
    std::unordered_set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        seen.insert(canonical_code(Tree(n, prufer_decode(seq))));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return static_cast<std::int64_t>(seen.size());
}

}  // namespace treenergy
