#include "treenergy/matching.hpp"

#include <algorithm>
#include <vector>

#include "treenergy/canonical.hpp"

namespace treenergy {

namespace {

enum class Rule { vertex_deletion, edge_deletion };

// Recursion state over induced subforests of one fixed tree. Subsets are
// tracked with a membership bitmap over original vertex ids.
class Recursion {
public:
    Recursion(const Tree& t, MPlusCache& cache, Rule rule)
        : tree_(t), cache_(cache), rule_(rule) {}

    X2Poly subset_poly(std::vector<int> vertices) {
        if (vertices.empty()) return X2Poly::one();  // m+ of the null graph
        // split into components, multiply
        std::vector<char> in(tree_.order(), 0), done(tree_.order(), 0);
        for (int v : vertices) in[v] = 1;
        X2Poly result = X2Poly::one();
        for (int start : vertices) {
            if (done[start]) continue;
            std::vector<int> comp, stack{start};
            done[start] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int u : tree_.neighbors(v))
                    if (in[u] && !done[u]) {
                        done[u] = 1;
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            result *= component_poly(comp);
        }
        return result;
    }

private:
    // comp: sorted original ids of one connected subtree
    X2Poly component_poly(const std::vector<int>& comp) {
        if (comp.size() == 1) return X2Poly::one();
        Tree sub = reindex(comp);
        std::string key = canonical_code(sub);
        X2Poly memo;
        if (cache_.lookup(key, memo)) return memo;

        X2Poly result;
        auto centers = tree_centers(sub);
        if (rule_ == Rule::vertex_deletion) {
            const int v = comp[centers[0]];  // back to original ids
            result = subset_poly(without(comp, {v}));
            for (int u : tree_.neighbors(v)) {
                if (!contains(comp, u)) continue;
                result += subset_poly(without(comp, {v, u})).shifted_x2();
            }
        } else {
            // delete the first in-component edge at a center
            const int v = comp[centers[0]];
            int u = -1;
            for (int cand : tree_.neighbors(v))
                if (contains(comp, cand)) {
                    u = cand;
                    break;
                }
            result = subset_poly_without_edge(comp, v, u);
            result += subset_poly(without(comp, {v, u})).shifted_x2();
        }
        cache_.store(key, result);
        return result;
    }

    // m+(comp - edge uv): the component splits in two at that edge.
    X2Poly subset_poly_without_edge(const std::vector<int>& comp, int u, int v) {
        std::vector<char> in(tree_.order(), 0);
        for (int w : comp) in[w] = 1;
        std::vector<int> side_u;
        std::vector<int> stack{u};
        std::vector<char> seen(tree_.order(), 0);
        seen[u] = 1;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            side_u.push_back(w);
            for (int x : tree_.neighbors(w)) {
                if (!in[x] || seen[x]) continue;
                if (w == u && x == v) continue;  // the removed edge
                seen[x] = 1;
                stack.push_back(x);
            }
        }
        std::vector<int> side_v;
        for (int w : comp)
            if (!seen[w]) side_v.push_back(w);
        std::sort(side_u.begin(), side_u.end());
        return component_or_unit(side_u) * component_or_unit(side_v);
    }

    X2Poly component_or_unit(const std::vector<int>& comp) {
        if (comp.empty()) return X2Poly::one();
        return component_poly(comp);
    }

    Tree reindex(const std::vector<int>& comp) const {
        std::vector<int> local(tree_.order(), -1);
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(comp.size() - 1);
        for (int v : comp)
            for (int u : tree_.neighbors(v))
                if (u > v && local[u] >= 0) edges.emplace_back(local[v], local[u]);
        return Tree(static_cast<int>(comp.size()), std::move(edges));
    }

    static bool contains(const std::vector<int>& sorted, int v) {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    }

    static std::vector<int> without(const std::vector<int>& sorted, std::initializer_list<int> rm) {
        std::vector<int> out;
        out.reserve(sorted.size());
        for (int v : sorted)
            if (std::find(rm.begin(), rm.end(), v) == rm.end()) out.push_back(v);
        return out;
    }

    const Tree& tree_;
    MPlusCache& cache_;
    Rule rule_;
};

MatchingPolynomial run(const Tree& t, MPlusCache& cache, Rule rule) {
    std::vector<int> all(t.order());
    for (int i = 0; i < t.order(); ++i) all[i] = i;
    Recursion rec(t, cache, rule);
    return {t.order(), rec.subset_poly(std::move(all))};
}

}  // namespace

MatchingPolynomial matching_polynomial(const Tree& t) {
    MPlusCache cache;
    return run(t, cache, Rule::vertex_deletion);
}

MatchingPolynomial matching_polynomial(const Tree& t, MPlusCache& cache) {
    return run(t, cache, Rule::vertex_deletion);
}

MatchingPolynomial matching_polynomial_edge(const Tree& t) {
    MPlusCache cache;
    return run(t, cache, Rule::edge_deletion);
}

}  // namespace treenergy
