#pragma once

#include <vector>

namespace treenergy {

/// All eigenvalues of a dense symmetric matrix (row-major, n x n), ascending.
/// Householder tridiagonalization followed by implicit-shift QL.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

/// Eigenvalues of a symmetric tridiagonal matrix given diagonal d and
/// subdiagonal e (e[i] couples i and i+1, e has n-1 entries). Ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e);

}  // namespace treenergy
