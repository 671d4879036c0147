#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "treenergy/enumerate.hpp"
#include "treenergy/matching.hpp"
#include "treenergy/poly.hpp"
#include "treenergy/tree.hpp"

using namespace treenergy;

namespace {

std::vector<long> to_longs(const X2Poly& p) {
    std::vector<long> out;
    for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_si());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("polynomials");

TEST_CASE("matching polynomial of named small graphs") {
    CHECK(to_longs(matching_polynomial(build_path(4)).poly) == std::vector<long>{1, 3, 1});
    CHECK(to_longs(matching_polynomial(build_path(1)).poly) == std::vector<long>{1});
    const Tree star5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(to_longs(matching_polynomial(star5).poly) == std::vector<long>{1, 4});
}

TEST_CASE("matching polynomial equals brute-force matching counts, n <= 9") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& t : enumerate_trees(n)) {
            const auto oracle = test_oracles::matching_counts_brute_force(t);
            const auto poly = matching_polynomial(t).poly;
            REQUIRE(poly.degree() + 1 <= static_cast<int>(oracle.size()) + 1);
            for (size_t k = 0; k < oracle.size(); ++k)
                CHECK(poly.coeff(static_cast<int>(k)) == oracle[k]);
        }
}

TEST_CASE("matching polynomial invariants: constant term and edge count") {
    for (const auto& t : enumerate_trees(9)) {
        const auto p = matching_polynomial(t);
        CHECK(p.order == 9);
        CHECK(p.poly.coeff(0) == 1);
        CHECK(p.poly.coeff(1) == t.edge_count());
        for (int k = 0; k <= p.poly.degree(); ++k) CHECK(p.poly.coeff(k) >= 0);
    }
}

TEST_CASE("vertex-deletion and edge-deletion recursions agree exactly, n <= 14") {
    for (int n = 2; n <= 14; ++n)
        for (const auto& t : enumerate_trees(n))
            CHECK(matching_polynomial(t).poly == matching_polynomial_edge(t).poly);
}

TEST_CASE("path_mplus conventions and recurrence") {
    CHECK(path_mplus(-1).poly.is_zero());
    CHECK(path_mplus(-1).order == -1);
    CHECK(to_longs(path_mplus(0).poly) == std::vector<long>{1});
    CHECK(to_longs(path_mplus(2).poly) == std::vector<long>{1, 1});
    CHECK(path_mplus(6).poly == matching_polynomial(build_path(6)).poly);
    CHECK_THROWS_AS(path_mplus(-2), std::invalid_argument);
}

TEST_CASE("eval_mplus values and scaling") {
    CHECK(eval_mplus(path_mplus(4), 1.0).to_double() == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(eval_mplus(path_mplus(2), 2.0).to_double() == doctest::Approx(5.0).epsilon(1e-14));
    for (int t : {1, 5, 17}) CHECK(eval_mplus(path_mplus(t), 0.0).to_double() == 1.0);
    CHECK_THROWS_AS(eval_mplus(path_mplus(3), -1.0), std::invalid_argument);

    // far beyond double range: m+(P_400, 10) ~ 10^400-ish, log must be finite
    const double lg = eval_mplus(path_mplus(400), 10.0).log();
    CHECK(std::isfinite(lg));
    CHECK(lg > 400.0);  // log(10^200) at the very least
}

TEST_CASE("scaled reals behave around extreme exponents") {
    const ScaledReal a = ScaledReal::from_parts(1.0, 3000);
    const ScaledReal b = ScaledReal::from_parts(1.0, -3000);
    CHECK((a * b).log() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((a + b).log() == doctest::Approx(3000 * std::log(2.0)).epsilon(1e-12));
    CHECK(ScaledReal::from_double(0.0).is_zero());
    CHECK(ScaledReal::from_double(-8.0).to_double() == -8.0);
}

TEST_CASE("closed form path evaluation") {
    // Vieta on the recurrence roots
    for (double x : {0.1, 1.0, 7.5}) {
        const double s = std::sqrt(1 + 4 * x * x);
        const double l1 = (1 + s) / 2, l2 = (1 - s) / 2;
        CHECK(l1 + l2 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(l1 * l2 == doctest::Approx(-x * x).epsilon(1e-14));
    }
    CHECK(closed_form_path(-1, 2.0) == 0.0);
    CHECK(closed_form_path(5, 1.0) == doctest::Approx(8.0).epsilon(1e-13));
    // agreement with exact evaluation across magnitudes
    for (int t : {1, 2, 7, 30, 60})
        for (double x : {1e-3, 0.3, 1.0, 42.0, 1e3}) {
            const double exact = std::exp(eval_mplus(path_mplus(t), x).log());
            CHECK(closed_form_path(t, x) ==
                  doctest::Approx(exact).epsilon(1e-12));
        }
}

TEST_CASE("path_ratio values and bounds") {
    CHECK(path_ratio(7, 1e-8).rho == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(path_ratio(5, 1.0).rho == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(path_ratio(3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(path_ratio(10, 0.0), std::invalid_argument);

    // t=20, x=2 against the exact ratio from the path polynomials
    const double exact = std::exp(eval_mplus(path_mplus(16), 2.0).log() -
                                  eval_mplus(path_mplus(17), 2.0).log());
    const double rho = path_ratio(20, 2.0).rho;
    CHECK(rho == doctest::Approx(exact).epsilon(1e-13));
    const double even_lo = 2.0 / (1.0 + std::sqrt(17.0));
    CHECK(rho > even_lo);
    CHECK(rho <= 1.0);
    // the t=3 convention used by the difference integrand
    CHECK(path_ratio_value(3, 5.0) == 0.0);
}

TEST_CASE("polynomial arithmetic and the edge recursion identity") {
    const X2Poly p2 = path_mplus(2).poly;  // 1 + x^2
    CHECK(to_longs(p2 * p2) == std::vector<long>{1, 2, 1});

    // removing the middle edge of P4: m+(P4) = m+(P2 u P2) + x^2 m+(P1 u P1)
    const MatchingPolynomial two_p2 = path_mplus(2).disjoint_union(path_mplus(2));
    const MatchingPolynomial two_p1 = path_mplus(1).disjoint_union(path_mplus(1));
    CHECK(two_p2.order == 4);
    const X2Poly rhs = two_p2.poly + two_p1.poly.shifted_x2();
    CHECK(rhs == path_mplus(4).poly);
    CHECK(to_longs(rhs) == std::vector<long>{1, 3, 1});

    CHECK(to_longs(X2Poly::one().shifted_x2()) == std::vector<long>{0, 1});
    CHECK((X2Poly{} * p2).is_zero());
    CHECK(to_longs(X2Poly({1, 1}).pow(2)) == std::vector<long>{1, 2, 1});
}

TEST_CASE("json round trip preserves exact big coefficients") {
    const MatchingPolynomial p = path_mplus(100);
    const MatchingPolynomial back = MatchingPolynomial::from_json(p.to_json());
    CHECK(back.order == 100);
    CHECK(back.poly == p.poly);
    // m(P_100, 28) = C(72, 28) = 75553695443676829680, beyond 64 bits
    CHECK(p.poly.coeff(28) == BigInt("75553695443676829680"));
    CHECK(p.poly.coeff(28) > BigInt("18446744073709551615"));

    const std::string text = p.to_json();
    CHECK(text.find("\"n\":100") != std::string::npos);
    CHECK(text.find("\"75553695443676829680\"") != std::string::npos);

    // fixed-length coefficient vector: the star has no 2-matching, so the
    // serialized list carries an explicit trailing zero
    const Tree star5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const auto sj = matching_polynomial(star5).to_json();
    CHECK(sj.find("[\"1\",\"4\",\"0\"]") != std::string::npos);
    const auto sback = MatchingPolynomial::from_json(sj);
    CHECK(sback.poly == matching_polynomial(star5).poly);
}

TEST_CASE("memoized recursion matches across a shared cache") {
    MPlusCache cache;
    const auto a = matching_polynomial(build_ta({4, 9}), cache);
    const auto b = matching_polynomial(build_ta({4, 9}), cache);  // cache hit path
    CHECK(a.poly == b.poly);
    CHECK(cache.size() > 0);
    const auto fresh = matching_polynomial(build_ta({4, 9}));
    CHECK(fresh.poly == a.poly);
}

TEST_SUITE_END();
