#pragma once

#include <string>

#include "treenergy/matching.hpp"
#include "treenergy/poly.hpp"
#include "treenergy/tree.hpp"

namespace treenergy {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
    double split_point = 1.0;  // head/tail boundary for the semi-infinite integral

    void validate() const;
};

enum class EnergyMethod { coulson, eigen };

std::string to_string(EnergyMethod m);

struct EnergyResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    EnergyMethod method = EnergyMethod::coulson;
    long evaluations = 0;
};

/// Largest order accepted by the dense eigenvalue route.
inline constexpr int kEigenOrderCap = 1024;

/// E(T) = (2/pi) * int_0^inf x^-2 log m+(T,x) dx, by adaptive Gauss-Kronrod
/// on [0, split] plus the substituted tail int_0^{1/split} log m+(T,1/u) du.
/// Below x = 1e-4 the integrand uses the series expansion of log m+ to avoid
/// the 0/0 at the origin. Throws if the tolerance cannot be met.
EnergyResult energy_coulson(const MatchingPolynomial& p, const QuadratureConfig& cfg = {});

/// E(T) as the sum of |eigenvalue| of the adjacency matrix, solved in-repo
/// (Householder + implicit QL). Orders above kEigenOrderCap are rejected.
EnergyResult energy_eigen(const Tree& t);

/// Closed-form path energy sum_{k=1..n} |2 cos(k pi/(n+1))|.
double path_energy_closed(int n);

}  // namespace treenergy
