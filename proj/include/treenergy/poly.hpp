#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "treenergy/scaled.hpp"

namespace treenergy {

using BigInt = mpz_class;

/// Integer polynomial in y = x^2, arbitrary-precision signed coefficients.
/// coeff(k) is the coefficient of x^(2k). Trailing zeros are trimmed, so the
/// zero polynomial has degree -1.
class X2Poly {
public:
    X2Poly() = default;
    explicit X2Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    X2Poly(std::initializer_list<long> coeffs);

    static X2Poly one() { return X2Poly({1}); }
    /// c * y^k
    static X2Poly monomial(int k, BigInt c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    X2Poly& operator+=(const X2Poly& o);
    X2Poly& operator-=(const X2Poly& o);
    X2Poly& operator*=(const X2Poly& o);
    X2Poly& operator*=(const BigInt& s);
    friend X2Poly operator+(X2Poly a, const X2Poly& b) { return a += b; }
    friend X2Poly operator-(X2Poly a, const X2Poly& b) { return a -= b; }
    friend X2Poly operator*(X2Poly a, const X2Poly& b) { return a *= b; }
    friend X2Poly operator*(X2Poly a, const BigInt& s) { return a *= s; }
    bool operator==(const X2Poly& o) const { return c_ == o.c_; }

    /// Multiply by y^k, i.e. by x^(2k).
    X2Poly shifted_x2(int k = 1) const;
    X2Poly pow(int e) const;

    /// Exact value at x (y = x*x) in scaled form; safe for any magnitude.
    ScaledReal eval_scaled(double x) const;

    std::vector<std::string> coeff_strings() const;  // decimal, exact
    static X2Poly from_coeff_strings(const std::vector<std::string>& s);

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Matching-count vector of a graph of the given order: coeff k counts the
/// k-matchings, so the polynomial is m+(G,x) = sum_k m(G,k) x^(2k).
struct MatchingPolynomial {
    int order = 0;  // n; -1 encodes the empty-path convention (zero polynomial)
    X2Poly poly = X2Poly::one();

    /// Disjoint-union composition: orders add, polynomials multiply.
    MatchingPolynomial disjoint_union(const MatchingPolynomial& o) const {
        return {order + o.order, poly * o.poly};
    }

    std::string to_json() const;
    static MatchingPolynomial from_json(const std::string& text);
};

/// m+(P_t, x) by the two-term path recurrence. Conventions: t = -1 gives the
/// zero polynomial, t = 0 and t = 1 give 1.
MatchingPolynomial path_mplus(int t);

/// m+ at x >= 0 in overflow-free scaled form; >= 1 for every graph.
ScaledReal eval_mplus(const MatchingPolynomial& p, double x);

/// Pre-scales the coefficients once so repeated evaluations (quadrature) skip
/// the bignum-to-double conversions.
class ScaledPolyEval {
public:
    explicit ScaledPolyEval(const X2Poly& p);
    ScaledReal eval(double x) const;
    double log_at(double x) const { return eval(x).log(); }
    int degree() const { return static_cast<int>(terms_.size()) - 1; }

private:
    std::vector<ScaledReal> terms_;
};

/// Closed form of m+(P_t, x) for x > 0:
/// (lambda1^(t+1) - lambda2^(t+1)) / sqrt(1+4x^2),
/// lambda1,2 = (1 +- sqrt(1+4x^2)) / 2.
double closed_form_path(int t, double x);

struct PathRatio {
    double x = 0.0;
    double rho = 1.0;  // in [1/(1+x^2), 1]
};

/// rho = m+(P_{t-4}, x) / m+(P_{t-3}, x), t >= 4, computed by the
/// continued-fraction iteration r <- 1/(1 + x^2 r) from r = 0 upward;
/// exact recurrence, no large coefficients, stable for any x > 0.
PathRatio path_ratio(int t, double x);

/// Same iteration with the t = 3 convention rho = 0; used by the
/// energy-difference integrand.
double path_ratio_value(int t, double x);

}  // namespace treenergy
