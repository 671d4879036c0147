#include "treenergy/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace treenergy {

namespace {

// Householder reduction to tridiagonal form. Overwrites the trailing blocks
// of `a`; fills diagonal d[0..n-1] and subdiagonal e[0..n-2].
void householder_tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                                std::vector<double>& e) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    d.assign(n, 0.0);
    e.assign(std::max(n - 1, 0), 0.0);
    std::vector<double> v(n), p(n);

    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1;  // size of the column below the diagonal
        double norm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            v[i] = at(k + 1 + i, k);
            norm2 += v[i] * v[i];
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) {
            e[k] = 0.0;
            continue;
        }
        const double alpha = v[0] >= 0.0 ? -norm : norm;
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (int i = 0; i < m; ++i) vnorm2 += v[i] * v[i];
        if (vnorm2 == 0.0) {
            e[k] = alpha;
            continue;
        }
        const double inv = 1.0 / std::sqrt(vnorm2);
        for (int i = 0; i < m; ++i) v[i] *= inv;

        e[k] = alpha;
        at(k + 1, k) = alpha;
        for (int i = 1; i < m; ++i) at(k + 1 + i, k) = 0.0;

        // B <- H B H on the trailing block, H = I - 2 v v^T:
        // p = B v, K = v^T p, w = 2 p - 2 K v, B -= v w^T + w v^T
        for (int i = 0; i < m; ++i) {
            double s = 0.0;
            for (int j = 0; j < m; ++j) s += at(k + 1 + i, k + 1 + j) * v[j];
            p[i] = s;
        }
        double K = 0.0;
        for (int i = 0; i < m; ++i) K += v[i] * p[i];
        for (int i = 0; i < m; ++i) p[i] = 2.0 * (p[i] - K * v[i]);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= i; ++j) {
                const double delta = v[i] * p[j] + p[i] * v[j];
                at(k + 1 + i, k + 1 + j) -= delta;
                if (i != j) at(k + 1 + j, k + 1 + i) -= delta;
            }
    }
    if (n >= 2) e[n - 2] = at(n - 1, n - 2);
    for (int i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL sweep on a symmetric tridiagonal matrix.
void ql_implicit(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.push_back(0.0);  // sentinel e[n-1]
    const double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("eigenvalue QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, pshift = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= pshift;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - pshift;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    pshift = s * r;
                    d[i + 1] = g + pshift;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= pshift;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
    if (!d.empty() && e.size() != d.size() - 1)
        throw std::invalid_argument("tridiagonal_eigenvalues: need n-1 subdiagonal entries");
    ql_implicit(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    if (n < 0 || a.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("symmetric_eigenvalues: bad dimensions");
    if (n == 0) return {};
    if (n == 1) return {a[0]};
    std::vector<double> d, e;
    householder_tridiagonalize(a, n, d, e);
    ql_implicit(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace treenergy
