#include "treenergy/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace treenergy {

std::vector<int> tree_centers(const Tree& t) {
    const int n = t.order();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int u : t.neighbors(v))
                if (--deg[u] == 1) next.push_back(u);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(const Tree& t, int root) {
    // Iterative post-order; recursion depth would be the tree height.
    const int n = t.order();
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : t.neighbors(v))
            if (parent[u] == -1) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> kids;
        for (int u : t.neighbors(v))
            if (parent[u] == v && u != v) kids.push_back(std::move(code[u]));
        std::sort(kids.begin(), kids.end());
        std::string c = "(";
        for (const auto& k : kids) c += k;
        c += ')';
        code[v] = std::move(c);
    }
    return code[root];
}

std::string canonical_code(const Tree& t) {
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = rooted_code(t, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

bool isomorphic(const Tree& a, const Tree& b) {
    return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

Tree canonical_relabel(const Tree& t) {
    const int n = t.order();
    if (n == 1) return t;
    // Root at the center whose rooted code is smallest (ties are symmetric).
    auto cs = tree_centers(t);
    int root = cs[0];
    std::string best = rooted_code(t, cs[0]);
    for (size_t i = 1; i < cs.size(); ++i) {
        std::string code = rooted_code(t, cs[i]);
        if (code < best) {
            best = std::move(code);
            root = cs[i];
        }
    }
    // Recompute per-vertex codes under that root, then walk children in
    // (code, then original id) order assigning preorder numbers.
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : t.neighbors(v))
            if (parent[u] == -1) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> kids;
        for (int u : t.neighbors(v))
            if (parent[u] == v && u != v) kids.push_back(code[u]);
        std::sort(kids.begin(), kids.end());
        std::string c = "(";
        for (const auto& k : kids) c += k;
        c += ')';
        code[v] = std::move(c);
    }
    std::vector<int> label(n, -1);
    int next_label = 0;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::function<void(int)> walk = [&](int v) {
        label[v] = next_label++;
        std::vector<int> kids;
        for (int u : t.neighbors(v))
            if (parent[u] == v && u != v) kids.push_back(u);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            if (code[a] != code[b]) return code[a] < code[b];
            return a < b;
        });
        for (int u : kids) {
            edges.emplace_back(label[v], next_label);
            walk(u);
        }
    };
    walk(root);
    return Tree(n, std::move(edges));
}

}  // namespace treenergy
