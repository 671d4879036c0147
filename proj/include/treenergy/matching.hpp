#pragma once

#include <mutex>
#include <string>
#include <unordered_map>

#include "treenergy/poly.hpp"
#include "treenergy/tree.hpp"

namespace treenergy {

/// Memo table for matching-polynomial recursion, keyed by the canonical code
/// of a connected subtree. Exact values, so concurrent insert-or-read is
/// deterministic; a mutex guards the map.
class MPlusCache {
public:
    bool lookup(const std::string& key, X2Poly& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, const X2Poly& value) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(key, value);
    }
    size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, X2Poly> map_;
};

/// m+(T, x) as an exact coefficient vector, by the vertex-deletion recursion
/// m+(G) = m+(G-v) + x^2 sum_{u in N(v)} m+(G-v-u), with the product rule
/// across components and memoization on canonical subtree codes.
MatchingPolynomial matching_polynomial(const Tree& t);
MatchingPolynomial matching_polynomial(const Tree& t, MPlusCache& cache);

/// Independent route via the edge-deletion recursion
/// m+(G) = m+(G-e) + x^2 m+(G-u-v); exists to cross-check the vertex route.
MatchingPolynomial matching_polynomial_edge(const Tree& t);

}  // namespace treenergy
