#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace cv2x::numerics {

inline double erfc(double x) { return std::erfc(x); }

inline double erf(double x) { return std::erf(x); }

/// Scaled complementary error function exp(x^2) * erfc(x).
///
/// The product overflows/underflows long before the scaled value does, so the
/// association-probability closed forms go through this instead of erfc.
inline double erfcx(double x)
{
    if (std::isnan(x)) return x;
    if (x < 2.0) {
        if (x < -26.0) return std::numeric_limits<double>::infinity();
        return std::exp(x * x) * std::erfc(x);
    }
    if (x > 1e8) return 1.0 / (x * std::sqrt(std::numbers::pi));

    // Continued fraction erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
    // evaluated with the modified Lentz method.
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 500; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

/// Rising factorial e (e+1) ... (e+n-1).
constexpr double rising_factorial(double e, int n)
{
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= e + i;
    return r;
}

constexpr double factorial(int n)
{
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

constexpr double binomial(int n, int k)
{
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace cv2x::numerics
