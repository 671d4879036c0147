#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "treenergy/canonical.hpp"
#include "treenergy/enumerate.hpp"
#include "treenergy/tree.hpp"

using namespace treenergy;

TEST_SUITE_BEGIN("trees");

TEST_CASE("build_path basics") {
    CHECK(build_path(1).order() == 1);
    CHECK(build_path(1).edge_count() == 0);
    CHECK(build_path(2).edge_count() == 1);
    const Tree p5 = build_path(5);
    CHECK(p5.order() == 5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.count_degree(1) == 2);
    CHECK(p5.max_degree() == 2);
    CHECK_THROWS_AS(build_path(0), std::invalid_argument);
}

TEST_CASE("tree validation") {
    CHECK_THROWS_AS(Tree(3, {{0, 1}}), std::invalid_argument);           // too few edges
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 1}}), std::invalid_argument);   // parallel
    CHECK_THROWS_AS(Tree(3, {{0, 0}, {1, 2}}), std::invalid_argument);   // loop
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {2, 3}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {5, 2}}), std::invalid_argument);   // out of range
}

TEST_CASE("build_ta structure") {
    const Tree t33 = build_ta({3, 3});
    CHECK(t33.order() == 11);
    CHECK(t33.count_degree(3) == 2);
    CHECK(t33.max_degree() == 3);

    const Tree t43 = build_ta({4, 3});
    CHECK(t43.order() == 15);
    CHECK(t43.count_degree(4) == 2);

    CHECK_THROWS_AS(build_ta({2, 5}), std::invalid_argument);
    CHECK_THROWS_AS(build_ta({3, 2}), std::invalid_argument);
}

TEST_CASE("build_ta(5,10): removing the two degree-5 vertices leaves 8 P2s and P8") {
    const Tree t = build_ta({5, 10});
    CHECK(t.order() == 26);
    std::vector<int> hubs;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 5) hubs.push_back(v);
    REQUIRE(hubs.size() == 2);

    std::vector<char> removed(t.order(), 0);
    removed[hubs[0]] = removed[hubs[1]] = 1;
    std::vector<int> comp_size;
    std::vector<char> seen(t.order(), 0);
    for (int s = 0; s < t.order(); ++s) {
        if (removed[s] || seen[s]) continue;
        int size = 0;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int u : t.neighbors(v))
                if (!removed[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        comp_size.push_back(size);
    }
    std::sort(comp_size.begin(), comp_size.end());
    std::vector<int> expect(8, 2);
    expect.push_back(8);
    CHECK(comp_size == expect);
}

TEST_CASE("build_tb structure") {
    const Tree t33 = build_tb({3, 3});
    CHECK(t33.order() == 11);
    CHECK(t33.degree(0) == 3);  // spine end
    CHECK(t33.degree(1) == 3);  // its neighbor
    CHECK(t33.count_degree(3) == 2);

    CHECK(build_tb({4, 4}).order() == build_ta({4, 4}).order());

    // (7,3): (Delta-1) + (Delta-2) = 11 attached 2-branches; branch vertices
    // are numbered after the spine P_{t+2}
    const Tree t73 = build_tb({7, 3});
    CHECK(t73.order() == 27);
    int attached_branches = 0;
    for (int v = 3 + 2; v < t73.order(); ++v)
        if (t73.degree(v) == 1 && t73.degree(t73.neighbors(v)[0]) == 2) ++attached_branches;
    CHECK(attached_branches == 11);
}

TEST_CASE("build_tc structure and feasibility") {
    const Tree t38 = build_tc(3, 8);
    CHECK(t38.order() == 8);
    CHECK(t38.count_degree(3) == 2);
    CHECK(t38.max_degree() == 3);

    const Tree t410 = build_tc(4, 10);
    CHECK(t410.order() == 10);
    CHECK(t410.count_degree(4) == 2);

    CHECK_THROWS_AS(build_tc(5, 6), std::invalid_argument);   // two deg-5 need >= 10
    CHECK_THROWS_AS(build_tc(3, 11), std::invalid_argument);  // sparse regime
}

TEST_CASE("family order and degree invariants over the grid") {
    for (int delta = 3; delta <= 10; ++delta)
        for (int t = 3; t <= 40; ++t) {
            const Tree a = build_ta({delta, t});
            const Tree b = build_tb({delta, t});
            CHECK(a.order() == 4 * delta - 4 + t);
            CHECK(b.order() == 4 * delta - 4 + t);
            CHECK(a.max_degree() == delta);
            CHECK(b.max_degree() == delta);
            CHECK(a.count_degree(delta) == 2);
            CHECK(b.count_degree(delta) == 2);
        }
}

TEST_CASE("canonical code identifies isomorphic relabelings") {
    const Tree a(4, {{0, 1}, {1, 2}, {2, 3}});
    const Tree b(4, {{3, 2}, {0, 2}, {1, 3}});  // another labeling of P4
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(isomorphic(a, b));
    const Tree star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_code(a) != canonical_code(star));

    CHECK(edgelist_string(canonical_relabel(a)) == edgelist_string(canonical_relabel(b)));
}

TEST_CASE("enumeration counts match the known sequence") {
    // number of isomorphism classes of trees on n = 1..12 vertices
    const long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n)
        CHECK(static_cast<long>(enumerate_trees(n).size()) == expected[n - 1]);
    CHECK_THROWS_AS(enumerate_trees(kEnumerationCap + 1), std::invalid_argument);
}

TEST_CASE("prufer enumeration cross-checks the level-sequence enumerator") {
    // exhaustive n^(n-2) sweep; n=10 (the 106 classes) was confirmed once and
    // takes minutes, so the routine check stops at n=8
    for (int n = 3; n <= 8; ++n)
        CHECK(count_trees_prufer(n) == static_cast<long>(enumerate_trees(n).size()));
}

TEST_CASE("prufer decode small cases") {
    CHECK(prufer_decode({}).size() == 1);  // n=2, single edge
    // sequence (1,0) on n=4 gives the path 2-1-0-3
    const auto edges = prufer_decode({1, 0});
    const Tree t(4, edges);
    CHECK(t.degree(0) == 2);
    CHECK(t.degree(1) == 2);
    CHECK(t.degree(2) == 1);
    CHECK(t.degree(3) == 1);
}

TEST_CASE("enumeration yields distinct classes and partitions by max-degree count") {
    for (int n = 4; n <= 12; ++n) {
        const auto all = enumerate_trees(n);
        std::set<std::string> codes;
        for (const auto& t : all) codes.insert(canonical_code(t));
        CHECK(codes.size() == all.size());  // pairwise non-isomorphic

        long constrained_total = 0;
        for (int delta = 3; delta < n; ++delta) {
            const auto sub = enumerate_constrained_trees(n, delta);
            for (const auto& t : sub) {
                CHECK(t.max_degree() == delta);
                CHECK(t.count_degree(delta) == 2);
            }
            constrained_total += static_cast<long>(sub.size());
        }
        long other = 0;
        for (const auto& t : all) {
            const int d = t.max_degree();
            if (d < 3 || t.count_degree(d) != 2) ++other;
        }
        CHECK(constrained_total + other == static_cast<long>(all.size()));
    }
}

TEST_CASE("constrained enumeration examples") {
    for (const auto& t : enumerate_constrained_trees(7, 3)) {
        CHECK(t.max_degree() == 3);
        CHECK(t.count_degree(3) == 2);
    }
    // (n=11, delta=3) contains Ta(3,3)
    const std::string want = canonical_code(build_ta({3, 3}));
    bool found = false;
    for (const auto& t : enumerate_constrained_trees(11, 3)) found |= canonical_code(t) == want;
    CHECK(found);
}

TEST_CASE("read_edgelist accepts the documented format") {
    std::istringstream in("# a comment\n0 1\n1 2\n");
    const Tree t = read_edgelist(in);
    CHECK(t.order() == 3);
    CHECK(isomorphic(t, build_path(3)));
}

TEST_CASE("read_edgelist rejects malformed input with line numbers") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_edgelist(in);
            FAIL_CHECK("expected EdgelistError for: " << text);
        } catch (const EdgelistError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("0 1\n0 1\n", "line 2");
    expect_error("0 1\n0 1\n", "duplicate edge");
    expect_error("0 1\n2 3\n", "disconnected");
    expect_error("0 1\nbanana\n", "line 2");
    expect_error("0 1\n1 2 3\n", "malformed");
    expect_error("0 1\n1 2\n2 0\n", "cycle");
    expect_error("0 1\n1 2\n2 0\n", "line 3");
    expect_error("0 2\n2 3\n", "contiguous");
    expect_error("0 0\n", "self-loop");
}

TEST_CASE("edge list round-trips exactly") {
    for (const auto& t : enumerate_trees(8)) {
        std::istringstream in(edgelist_string(t));
        const Tree back = read_edgelist(in);
        CHECK(back.order() == t.order());
        CHECK(back.edges() == t.edges());
    }
}

TEST_SUITE_END();
