#include "treenergy/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace treenergy {

Tree::Tree(int vertex_count, std::vector<std::pair<int, int>> edges)
    : order_(vertex_count), edges_(std::move(edges)) {
    if (order_ < 1) throw std::invalid_argument("tree must have at least one vertex");
    if (static_cast<int>(edges_.size()) != order_ - 1)
        throw std::invalid_argument("tree on " + std::to_string(order_) + " vertices needs " +
                                    std::to_string(order_ - 1) + " edges, got " +
                                    std::to_string(edges_.size()));
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= order_ || v >= order_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("parallel edge rejected");

    adj_.assign(order_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    // n-1 edges + connected <=> tree
    std::vector<char> seen(order_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != order_) throw std::invalid_argument("graph is disconnected");
}

int Tree::max_degree() const {
    int m = 0;
    for (int v = 0; v < order_; ++v) m = std::max(m, degree(v));
    return m;
}

int Tree::count_degree(int d) const {
    int c = 0;
    for (int v = 0; v < order_; ++v)
        if (degree(v) == d) ++c;
    return c;
}

std::vector<int> Tree::degree_sequence() const {
    std::vector<int> ds(order_);
    for (int v = 0; v < order_; ++v) ds[v] = degree(v);
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

void FamilyParams::validate() const {
    if (max_degree < 3) throw std::invalid_argument("family requires Delta >= 3");
    if (path_param < 3) throw std::invalid_argument("family requires t >= 3");
}

Tree build_path(int t) {
    if (t < 1) throw std::invalid_argument("path needs t >= 1");
    std::vector<std::pair<int, int>> e;
    e.reserve(t - 1);
    for (int i = 0; i + 1 < t; ++i) e.emplace_back(i, i + 1);
    return Tree(t, std::move(e));
}

namespace {

// Append `count` pendant 2-branches to `host`; each branch uses the next two
// fresh vertex ids as (middle, leaf).
void attach_branches(std::vector<std::pair<int, int>>& e, int host, int count, int& next_id) {
    for (int i = 0; i < count; ++i) {
        e.emplace_back(host, next_id);
        e.emplace_back(next_id, next_id + 1);
        next_id += 2;
    }
}

}  // namespace

namespace detail {

Tree build_ta_any(int delta, int t) {
    if (delta < 2 || t < 3) throw std::invalid_argument("build_ta needs Delta >= 2, t >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < t; ++i) e.emplace_back(i, i + 1);
    int next = t;
    attach_branches(e, 0, delta - 1, next);
    attach_branches(e, t - 1, delta - 1, next);
    return Tree(next, std::move(e));
}

Tree build_tb_any(int delta, int t) {
    if (delta < 2 || t < 3) throw std::invalid_argument("build_tb needs Delta >= 2, t >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < t + 2; ++i) e.emplace_back(i, i + 1);
    int next = t + 2;
    attach_branches(e, 0, delta - 1, next);
    attach_branches(e, 1, delta - 2, next);
    return Tree(next, std::move(e));
}

}  // namespace detail

Tree build_ta(const FamilyParams& p) {
    p.validate();
    return detail::build_ta_any(p.max_degree, p.path_param);
}

Tree build_tb(const FamilyParams& p) {
    p.validate();
    return detail::build_tb_any(p.max_degree, p.path_param);
}

Tree build_tc(int delta, int n) {
    if (delta < 3) throw std::invalid_argument("build_tc needs Delta >= 3");
    if (n < 2 * delta)
        throw std::invalid_argument("build_tc: two degree-" + std::to_string(delta) +
                                    " vertices need at least " + std::to_string(2 * delta) +
                                    " vertices");
    if (n > 4 * delta - 2)
        throw std::invalid_argument("build_tc: n must be <= 4*Delta-2 (dense case)");
    // Vertex budget forces the branch/pendant counts.
    const int branches = n - 2 * delta;
    const int pendants = 4 * delta - 2 - n;
    const int pu = (pendants + 1) / 2;
    const int pv = pendants / 2;
    std::vector<std::pair<int, int>> e{{0, 1}};
    int next = 2;
    attach_branches(e, 0, delta - 1 - pu, next);
    for (int i = 0; i < pu; ++i) e.emplace_back(0, next++);
    attach_branches(e, 1, delta - 1 - pv, next);
    for (int i = 0; i < pv; ++i) e.emplace_back(1, next++);
    (void)branches;
    return Tree(next, std::move(e));
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw EdgelistError("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Tree read_edgelist(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    int max_id = -1;

    // union-find for cycle detection while reading
    std::vector<int> parent;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        size_t pos = sv.find_first_not_of(" \t\r");
        if (pos == std::string_view::npos) continue;
        if (sv[pos] == '#') continue;

        std::istringstream ls(line);
        long u = -1, v = -1;
        std::string extra;
        if (!(ls >> u >> v)) parse_fail(line_no, "malformed line, expected \"u v\"");
        if (ls >> extra) parse_fail(line_no, "malformed line, trailing content \"" + extra + "\"");
        if (u < 0 || v < 0) parse_fail(line_no, "negative vertex id");
        if (u > 2'000'000 || v > 2'000'000) parse_fail(line_no, "vertex id too large");
        if (u == v) parse_fail(line_no, "self-loop");

        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            parse_fail(line_no,
                       "duplicate edge " + std::to_string(lo) + " " + std::to_string(hi));
        max_id = std::max(max_id, hi);
        if (static_cast<int>(parent.size()) <= max_id) {
            int old = static_cast<int>(parent.size());
            parent.resize(max_id + 1);
            for (int i = old; i <= max_id; ++i) parent[i] = i;
        }
        int ru = find(lo), rv = find(hi);
        if (ru == rv)
            parse_fail(line_no,
                       "cycle detected at edge " + std::to_string(lo) + " " + std::to_string(hi));
        parent[ru] = rv;
        edges.push_back({lo, hi});
    }

    if (edges.empty() && max_id < 0)
        throw EdgelistError("edge list: empty input (a single vertex has no edge-list form)");
    const int n = max_id + 1;
    std::vector<char> present(n, 0);
    for (const auto& [u, v] : edges) present[u] = present[v] = 1;
    for (int i = 0; i < n; ++i)
        if (!present[i])
            throw EdgelistError("edge list: ids must form 0..n-1 contiguously, id " +
                                     std::to_string(i) + " missing");
    // No cycles and no gaps, so fewer than n-1 edges means a forest with
    // more than one component.
    if (static_cast<int>(edges.size()) != n - 1)
        throw EdgelistError("edge list: graph is disconnected (" +
                                 std::to_string(edges.size()) + " edges, " + std::to_string(n) +
                                 " vertices)");
    return Tree(n, std::move(edges));
}

Tree read_edgelist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EdgelistError("cannot open edge list file: " + path);
    return read_edgelist(in);
}

void write_edgelist(const Tree& t, std::ostream& out) {
    for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

std::string edgelist_string(const Tree& t) {
    std::ostringstream os;
    write_edgelist(t, os);
    return os.str();
}

}  // namespace treenergy
