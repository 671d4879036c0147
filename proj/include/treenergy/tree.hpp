#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treenergy {

/// Malformed edge-list input (bad line, duplicate edge, cycle, disconnected,
/// id gap); messages carry line numbers where one applies.
class EdgelistError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Labeled simple tree over vertex ids 0..n-1. Immutable after construction;
/// the constructor validates tree-ness (n-1 edges, connected, no loops or
/// parallel edges) and throws std::invalid_argument otherwise.
class Tree {
public:
    Tree(int vertex_count, std::vector<std::pair<int, int>> edges);

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int max_degree() const;
    int count_degree(int d) const;
    std::vector<int> degree_sequence() const;  // descending

private:
    int order_;
    std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
    std::vector<std::vector<int>> adj_;
};

/// (Delta, t) parameters of the two candidate families; order n = 4*Delta-4+t.
struct FamilyParams {
    int max_degree = 3;  // Delta
    int path_param = 3;  // t

    int order() const { return 4 * max_degree - 4 + path_param; }
    void validate() const;  // Delta >= 3, t >= 3
};

/// Path on t vertices, vertex i adjacent to i+1. t >= 1.
Tree build_path(int t);

/// Central path P_t with Delta-1 pendant 2-branches on each end.
/// Vertex numbering: spine 0..t-1 first, then branches in attachment order
/// (end 0 first, then end t-1), each branch as (middle, leaf).
Tree build_ta(const FamilyParams& p);

/// Spine P_{t+2} with Delta-1 2-branches on end vertex 0 and Delta-2 on its
/// neighbor, vertex 1. Numbering as in build_ta: spine first, then branches.
Tree build_tb(const FamilyParams& p);

/// Dense-case extremal tree on n vertices, n <= 4*Delta-2: adjacent branching
/// vertices u=0, v=1 carrying the forced n-2*Delta 2-branches, the remaining
/// 4*Delta-2-n pendants split between u and v differing by at most one.
Tree build_tc(int delta, int n);

namespace detail {
// Relaxed builders for delta >= 2; the Delta=2 instances degenerate to paths
// and are needed by the polynomial difference identity at its vanishing point.
Tree build_ta_any(int delta, int t);
Tree build_tb_any(int delta, int t);
}  // namespace detail

/// Parse the edge-list format: one "u v" pair per nonblank line, lines
/// starting with '#' ignored, 0-based contiguous ids. Throws
/// std::runtime_error with a line-numbered message on malformed input,
/// duplicate edges, cycles, or disconnected input.
Tree read_edgelist(std::istream& in);
Tree read_edgelist_file(const std::string& path);

/// Emit edges as "u v" lines, u < v, sorted lexicographically, newline-terminated.
void write_edgelist(const Tree& t, std::ostream& out);
std::string edgelist_string(const Tree& t);

}  // namespace treenergy
