#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace treenergy {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;  // estimated bound on |error|
    long evaluations = 0;
    bool converged = false;
};

namespace quad_detail {

// 15-point Kronrod / 7-point Gauss nodes and weights on [-1, 1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

// One G7K15 application with the QUADPACK-style scaled error estimate.
template <class F>
Interval gk15(const F& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    double fv[15];
    const double fc = f(centr);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv[j] = f1;
        fv[j + 7] = f2;
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[j + 7] - reskh));

    const double h = std::abs(hlgth);
    resabs *= h;
    resasc *= h;
    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    // roundoff floor; the integrands here are smooth analytic expressions
    // whose evaluation stays within a few ulps, so a modest multiple of
    // eps * integral-of-|f| is an honest bound
    const double epmach = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (10.0 * epmach)) err = std::max(epmach * 10.0 * resabs, err);
    return {a, b, resk * hlgth, err};
}

}  // namespace quad_detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]: repeatedly bisect the
/// interval with the largest error estimate until the estimates sum below
/// abs_tol or the subdivision budget runs out. Endpoints are never evaluated.
/// The final sum is compensated (Kahan).
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, double abs_tol,
                              int max_subdivisions = 2000) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<quad_detail::Interval> heap;
    heap.push(quad_detail::gk15(f, a, b));
    out.evaluations = 15;
    double err_sum = heap.top().error;

    std::vector<quad_detail::Interval> frozen;  // at floating-point resolution
    int splits = 0;
    while (err_sum > abs_tol && splits < max_subdivisions && !heap.empty()) {
        quad_detail::Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            frozen.push_back(worst);
            continue;
        }
        auto left = quad_detail::gk15(f, worst.a, mid);
        auto right = quad_detail::gk15(f, mid, worst.b);
        out.evaluations += 30;
        err_sum += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }
    while (!heap.empty()) {
        frozen.push_back(heap.top());
        heap.pop();
    }

    // compensated sums of values and error estimates
    double sum = 0.0, comp = 0.0, errs = 0.0;
    for (const auto& iv : frozen) {
        const double y = iv.value - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        errs += iv.error;
    }
    out.value = sum;
    out.abs_error = errs;
    out.converged = errs <= abs_tol;
    return out;
}

}  // namespace treenergy
