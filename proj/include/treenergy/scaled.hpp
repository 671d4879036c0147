#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace treenergy {

/// Floating-point value kept as mantissa * 2^exponent with |mantissa| in
/// [0.5, 1) (or exactly 0). Survives magnitudes far beyond double range,
/// which matching-polynomial evaluation needs for large trees.
struct ScaledReal {
    double mantissa = 0.0;
    std::int64_t exponent = 0;

    static ScaledReal zero() { return {}; }

    static ScaledReal from_double(double v) {
        if (v == 0.0) return {};
        int e = 0;
        double m = std::frexp(v, &e);
        return {m, e};
    }

    static ScaledReal from_parts(double mant, std::int64_t exp) {
        ScaledReal r{mant, exp};
        r.normalize();
        return r;
    }

    bool is_zero() const { return mantissa == 0.0; }

    void normalize() {
        if (mantissa == 0.0) {
            exponent = 0;
            return;
        }
        int e = 0;
        mantissa = std::frexp(mantissa, &e);
        exponent += e;
    }

    ScaledReal operator*(const ScaledReal& o) const {
        if (is_zero() || o.is_zero()) return {};
        return from_parts(mantissa * o.mantissa, exponent + o.exponent);
    }

    ScaledReal operator*(double v) const { return *this * from_double(v); }

    ScaledReal operator+(const ScaledReal& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const ScaledReal* hi = this;
        const ScaledReal* lo = &o;
        if (hi->exponent < lo->exponent) std::swap(hi, lo);
        std::int64_t shift = hi->exponent - lo->exponent;
        if (shift > 1100) return *hi;  // below double precision of the larger term
        return from_parts(hi->mantissa + std::ldexp(lo->mantissa, static_cast<int>(-shift)),
                          hi->exponent);
    }

    /// Natural log of the value; requires a strictly positive value.
    double log() const {
        return std::log(mantissa) + static_cast<double>(exponent) * kLn2;
    }

    /// Collapse to double; overflows to +/-inf for huge exponents.
    double to_double() const {
        if (is_zero()) return 0.0;
        if (exponent > 1024) return mantissa > 0 ? std::numeric_limits<double>::infinity()
                                                 : -std::numeric_limits<double>::infinity();
        if (exponent < -1074) return 0.0;
        return std::ldexp(mantissa, static_cast<int>(exponent));
    }

private:
    static constexpr double kLn2 = 0.6931471805599453094172321214581766;
};

}  // namespace treenergy
