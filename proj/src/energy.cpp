#include "treenergy/energy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "treenergy/eigen_solver.hpp"
#include "treenergy/format.hpp"
#include "treenergy/quadrature.hpp"

namespace treenergy {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0)) throw std::invalid_argument("abs_tol must be > 0");
    if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
    if (!(split_point > 0)) throw std::invalid_argument("split_point must be > 0");
}

std::string to_string(EnergyMethod m) {
    return m == EnergyMethod::coulson ? "coulson" : "eigen";
}

EnergyResult energy_coulson(const MatchingPolynomial& p, const QuadratureConfig& cfg) {
    cfg.validate();
    if (p.poly.is_zero()) throw std::invalid_argument("energy of the zero polynomial undefined");
    if (p.poly.coeff(0) != 1)
        throw std::invalid_argument("matching polynomial must have constant term 1");
    if (p.poly.degree() == 0) return {0.0, 0.0, EnergyMethod::coulson, 0};  // edgeless

    const ScaledPolyEval eval(p.poly);
    const double m1 = p.poly.coeff(1).get_d();
    const double m2 = p.poly.coeff(2).get_d();
    const double m3 = p.poly.coeff(3).get_d();
    // log(1 + m1 y + m2 y^2 + m3 y^3 + ...) / y around y = x^2 = 0
    const double s1 = m1;
    const double s2 = m2 - 0.5 * m1 * m1;
    const double s3 = m3 - m1 * m2 + m1 * m1 * m1 / 3.0;
    constexpr double kSeriesCutoff = 1e-4;

    auto head = [&](double x) {
        if (x < kSeriesCutoff) {
            const double y = x * x;
            return s1 + y * (s2 + y * s3);
        }
        return eval.log_at(x) / (x * x);
    };
    auto tail = [&](double u) {
        if (u <= 0.0) return 0.0;  // endpoint is never sampled by the rule
        return eval.log_at(1.0 / u);
    };

    const auto rh = integrate_adaptive(head, 0.0, cfg.split_point, cfg.abs_tol / 2,
                                       cfg.max_subdivisions);
    const auto rt = integrate_adaptive(tail, 0.0, 1.0 / cfg.split_point, cfg.abs_tol / 2,
                                       cfg.max_subdivisions);
    if (!rh.converged || !rt.converged)
        throw std::runtime_error("energy_coulson: tolerance " + fmt_g12(cfg.abs_tol) +
                                 " not met within " + std::to_string(cfg.max_subdivisions) +
                                 " subdivisions (error estimate " +
                                 fmt_g12(rh.abs_error + rt.abs_error) + ")");
    constexpr double two_over_pi = 2.0 / std::numbers::pi;
    return {two_over_pi * (rh.value + rt.value), two_over_pi * (rh.abs_error + rt.abs_error),
            EnergyMethod::coulson, rh.evaluations + rt.evaluations};
}

EnergyResult energy_eigen(const Tree& t) {
    const int n = t.order();
    if (n > kEigenOrderCap)
        throw std::invalid_argument("energy_eigen capped at order " +
                                    std::to_string(kEigenOrderCap));
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (const auto& [u, v] : t.edges()) {
        a[static_cast<size_t>(u) * n + v] = 1.0;
        a[static_cast<size_t>(v) * n + u] = 1.0;
    }
    const auto lambda = symmetric_eigenvalues(std::move(a), n);
    double sum = 0.0, comp = 0.0, lmax = 0.0;
    for (double l : lambda) {
        lmax = std::max(lmax, std::abs(l));
        const double y = std::abs(l) - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    const double err = 8.0 * n * std::numeric_limits<double>::epsilon() * std::max(lmax, 1.0);
    return {sum, err, EnergyMethod::eigen, n};
}

double path_energy_closed(int n) {
    if (n < 1) throw std::invalid_argument("path_energy_closed needs n >= 1");
    double sum = 0.0, comp = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double y = std::abs(2.0 * std::cos(k * std::numbers::pi / (n + 1))) - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

}  // namespace treenergy
