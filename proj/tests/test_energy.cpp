#include <doctest.h>

#include <cmath>
#include <numbers>

#include "treenergy/eigen_solver.hpp"
#include "treenergy/energy.hpp"
#include "treenergy/enumerate.hpp"
#include "treenergy/quadrature.hpp"

using namespace treenergy;

TEST_SUITE_BEGIN("energy");

TEST_CASE("adaptive quadrature on reference integrals") {
    const auto poly = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-13);
    CHECK(poly.converged);
    CHECK(poly.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    // integrable endpoint singularity, as in the substituted Coulson tail
    const auto logint = integrate_adaptive([](double x) { return std::log(x); }, 0.0, 1.0, 1e-12);
    CHECK(logint.converged);
    CHECK(logint.value == doctest::Approx(-1.0).epsilon(1e-11));
    CHECK(std::abs(logint.value + 1.0) <= logint.abs_error * 10 + 1e-13);

    const auto gauss = integrate_adaptive([](double x) { return std::exp(-x * x); }, -8.0, 8.0,
                                          1e-13);
    CHECK(gauss.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("eigen solver reproduces known spectra") {
    // 2x2 with eigenvalues 1, 3
    CHECK(symmetric_eigenvalues({2, 1, 1, 2}, 2)[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(symmetric_eigenvalues({2, 1, 1, 2}, 2)[1] == doctest::Approx(3.0).epsilon(1e-14));

    // path adjacency spectrum 2 cos(k pi / (n+1))
    const int n = 7;
    std::vector<double> a(n * n, 0.0);
    for (int i = 0; i + 1 < n; ++i) a[i * n + i + 1] = a[(i + 1) * n + i] = 1.0;
    const auto lam = symmetric_eigenvalues(a, n);
    for (int k = 1; k <= n; ++k) {
        const double expect = 2.0 * std::cos((n + 1 - k) * std::numbers::pi / (n + 1));
        CHECK(lam[k - 1] == doctest::Approx(expect).epsilon(1e-12));
    }

    // star K_{1,5}: eigenvalues -sqrt5, 0 (x4), sqrt5
    std::vector<double> s(36, 0.0);
    for (int leaf = 1; leaf < 6; ++leaf) s[0 * 6 + leaf] = s[leaf * 6 + 0] = 1.0;
    const auto sl = symmetric_eigenvalues(s, 6);
    CHECK(sl.front() == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-13));
    CHECK(sl.back() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
    for (int i = 1; i < 5; ++i) CHECK(std::abs(sl[i]) < 1e-13);

    // tridiagonal front end
    const auto tri = tridiagonal_eigenvalues({0, 0}, {1});
    CHECK(tri[0] == doctest::Approx(-1.0));
    CHECK(tri[1] == doctest::Approx(1.0));
}

TEST_CASE("coulson energies of named trees") {
    const auto p2 = energy_coulson(matching_polynomial(build_path(2)));
    CHECK(p2.value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(p2.method == EnergyMethod::coulson);

    const auto p3 = energy_coulson(matching_polynomial(build_path(3)));
    CHECK(p3.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));

    const Tree star5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const auto st = energy_coulson(matching_polynomial(star5));
    CHECK(st.value == doctest::Approx(4.0).epsilon(1e-12));

    const auto single = energy_coulson(matching_polynomial(build_path(1)));
    CHECK(single.value == 0.0);
}

TEST_CASE("eigen energies of named trees") {
    CHECK(energy_eigen(build_path(1)).value == 0.0);
    // E(P4) = sum |2 cos(k pi/5)| = 2 sqrt 5
    CHECK(energy_eigen(build_path(4)).value ==
          doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-13));
    CHECK(energy_eigen(build_path(4)).value == doctest::Approx(4.47214).epsilon(1e-5));

    const auto a = energy_eigen(build_ta({3, 3}));
    const auto c = energy_coulson(matching_polynomial(build_ta({3, 3})));
    CHECK(std::abs(a.value - c.value) <= 1e-8);
    CHECK(std::abs(a.value - c.value) <= a.abs_error_estimate + c.abs_error_estimate + 1e-10);
}

TEST_CASE("path energy closed form") {
    CHECK(std::abs(path_energy_closed(1)) <= 1e-15);  // |2 cos(pi/2)| in doubles
    CHECK(path_energy_closed(2) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(energy_eigen(build_path(7)).value ==
          doctest::Approx(path_energy_closed(7)).epsilon(1e-12));
    CHECK_THROWS_AS(path_energy_closed(0), std::invalid_argument);
}

TEST_CASE("energy result invariants") {
    for (int n : {1, 2, 5, 9}) {
        const auto e = energy_eigen(build_path(n));
        CHECK(e.value >= 0.0);
        CHECK((e.value == 0.0) == (n == 1));
    }
}

TEST_CASE("eigen route order cap") {
    CHECK_THROWS_AS(energy_eigen(build_path(kEigenOrderCap + 1)), std::invalid_argument);
    // just inside the cap still works (order 600 covers the documented >= 500)
    const auto e = energy_eigen(build_path(600));
    CHECK(e.value == doctest::Approx(path_energy_closed(600)).epsilon(1e-10));
}

TEST_CASE("quadrature convergence under tolerance tightening") {
    const auto poly = matching_polynomial(build_ta({5, 12}));
    QuadratureConfig loose;
    loose.abs_tol = 1e-7;
    QuadratureConfig tight;
    tight.abs_tol = 5e-8;
    const auto a = energy_coulson(poly, loose);
    const auto b = energy_coulson(poly, tight);
    CHECK(std::abs(a.value - b.value) <= a.abs_error_estimate);
}

TEST_CASE("unreachable tolerance reports rather than stalls") {
    QuadratureConfig impossible;
    impossible.abs_tol = 1e-18;
    impossible.max_subdivisions = 64;
    CHECK_THROWS_AS(energy_coulson(matching_polynomial(build_ta({6, 20})), impossible),
                    std::runtime_error);
}

TEST_CASE("config validation") {
    QuadratureConfig bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(energy_coulson(matching_polynomial(build_path(3)), bad),
                    std::invalid_argument);
}

TEST_SUITE_END();
