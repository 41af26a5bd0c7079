#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "cv2x/error.hpp"
#include "cv2x/numerics/quadrature.hpp"
#include "cv2x/numerics/special.hpp"

namespace cv2x::numerics {

/// Highest j-derivative the evaluator produces. Covers Nakagami m <= 4.
inline constexpr int kMaxDerivativeOrder = 3;

enum class Measure {
    One,  ///< line measure dx (interferers on a road)
    X,    ///< area measure x dx (interferers on the plane)
};

/// d(x) = power_gain * x^-alpha / m
struct PathKernel {
    double power_gain = 1.0;  ///< linear watts x linear gain
    double alpha = 4.0;
    int m = 1;

    double operator()(double x) const { return power_gain * std::pow(x, -alpha) / m; }
};

/// Six-argument descriptor of an interference Laplace transform
///
///     K(a; b, c; d; e; f)(j) = exp(-2 a \int_b^c [1 - (1 + j d(x))^-e] f(x) dx)
///
/// where f(x) is 1 for interferers on a line and x for interferers on the
/// plane. The factor 2 is always applied; for planar sets the caller folds pi
/// into `prefactor` (pass pi * lambda).
struct KFunctionSpec {
    double prefactor = 0.0;
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    PathKernel kernel;
    int exponent = 1;
    Measure measure = Measure::One;

    void validate() const
    {
        if (!(prefactor >= 0.0) || !std::isfinite(prefactor))
            throw ValidationError("KFunctionSpec: prefactor must be finite and >= 0");
        if (!(lower >= 0.0) || !std::isfinite(lower)) throw ValidationError("KFunctionSpec: lower must be >= 0");
        if (!(upper > lower)) throw ValidationError("KFunctionSpec: upper must exceed lower");
        if (exponent < 1) throw ValidationError("KFunctionSpec: exponent must be >= 1");
        if (kernel.m < 1) throw ValidationError("KFunctionSpec: kernel m must be >= 1");
        if (!(kernel.alpha > 0.0)) throw ValidationError("KFunctionSpec: kernel alpha must be > 0");
        if (!(kernel.power_gain >= 0.0)) throw ValidationError("KFunctionSpec: kernel power_gain must be >= 0");
    }
};

/// Default accuracy for the inner Laplace integrals. Absolute tolerance is
/// effectively off because the derivative components span many decades.
inline QuadratureSettings laplace_settings()
{
    QuadratureSettings s;
    s.rel_tol = 1e-10;
    s.abs_tol = 1e-300;
    s.max_subdivisions = 4000;
    return s;
}

/// g^(n)(j) for n = 0..kMaxDerivativeOrder where zeta(j) = exp(-g(j)).
using ExponentDerivatives = std::array<double, kMaxDerivativeOrder + 1>;

/// Derivatives of the exponent g(j) = 2a \int_b^c [1 - (1 + j d)^-e] f dx up
/// to `max_order`, by differentiating under the integral sign.
inline ExponentDerivatives exponent_derivatives(const KFunctionSpec& spec, double j, int max_order,
                                                const QuadratureSettings& settings = laplace_settings())
{
    spec.validate();
    if (max_order < 0 || max_order > kMaxDerivativeOrder)
        throw UnsupportedOrder("derivative order " + std::to_string(max_order) + " exceeds " +
                               std::to_string(kMaxDerivativeOrder));
    if (!(j >= 0.0) || !std::isfinite(j)) throw Error("Laplace variable j must be finite and >= 0");

    ExponentDerivatives out{};
    if (spec.prefactor == 0.0 || spec.kernel.power_gain == 0.0) return out;
    if (j == 0.0 && max_order == 0) return out;

    const bool planar = spec.measure == Measure::X;
    if (std::isinf(spec.upper)) {
        const double needed = planar ? 2.0 : 1.0;
        if (spec.kernel.alpha <= needed)
            throw NonConvergence("Laplace exponent diverges: alpha=" + std::to_string(spec.kernel.alpha) +
                                 " over an unbounded " + (planar ? "plane" : "line"));
    }

    const double e = spec.exponent;

    // Whole plane: the exponent is 2a C (jP/m)^delta with delta = 2/alpha and
    // C = Gamma(1-delta) Gamma(e+delta) / (2 Gamma(e)).
    if (planar && spec.lower == 0.0 && std::isinf(spec.upper)) {
        const double delta = 2.0 / spec.kernel.alpha;
        const double c = std::exp(std::lgamma(1.0 - delta) + std::lgamma(e + delta) - std::lgamma(e)) / 2.0;
        const double base = 2.0 * spec.prefactor * c * std::pow(spec.kernel.power_gain / spec.kernel.m, delta);
        double falling = 1.0;
        for (int n = 0; n <= max_order; ++n) {
            if (j == 0.0)
                out[n] = n == 0 ? 0.0 : falling * std::numeric_limits<double>::infinity();
            else
                out[n] = base * falling * std::pow(j, delta - n);
            falling *= delta - n;
        }
        return out;
    }

    std::array<double, kMaxDerivativeOrder + 1> coeff{};
    for (int n = 1; n <= max_order; ++n) coeff[n] = ((n % 2 == 1) ? 1.0 : -1.0) * rising_factorial(e, n);

    auto integrand = [&](double x) {
        std::array<double, kMaxDerivativeOrder + 1> v{};
        if (x <= 0.0) {
            // d(x) -> infinity: 1 - (1+jd)^-e -> 1 (for j > 0); higher terms vanish.
            if (j > 0.0) v[0] = planar ? 0.0 : 1.0;
            return v;
        }
        const double d = spec.kernel(x);
        const double w = planar ? x : 1.0;
        const double u = j * d;
        const double lg = std::log1p(u);
        v[0] = -std::expm1(-e * lg) * w;
        if (max_order > 0) {
            const double base = std::exp(-e * lg);
            const double q = 1.0 / (1.0 + u);
            double dq = 1.0;
            for (int n = 1; n <= max_order; ++n) {
                dq *= d * q;
                v[n] = coeff[n] * dq * base * w;
            }
        }
        return v;
    };

    double scale = spec.lower;
    if (j > 0.0) {
        const double reach = std::pow(j * spec.kernel.power_gain / spec.kernel.m, 1.0 / spec.kernel.alpha);
        scale = std::max(scale, reach);
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;

    using Vec = std::array<double, kMaxDerivativeOrder + 1>;
    Vec total{};
    if (std::isinf(spec.upper)) {
        // Far out every component decays at least like x^-q, q = alpha - w.
        // x = knee v^(-1/(q-1)) turns that tail into a bounded integrand on
        // (0, 1]; the plain u/(1-u) map would leave a (1-u)^(q-2) endpoint
        // singularity that bisection cannot resolve when q is close to 1.
        const double q = spec.kernel.alpha - (planar ? 1.0 : 0.0);
        const double p = 1.0 / (q - 1.0);
        const double knee = spec.lower + scale;
        const auto head = integrate_vec<kMaxDerivativeOrder + 1>(integrand, spec.lower, knee, settings);
        auto tail = [&](double v) {
            Vec r{};
            if (v <= 0.0) return r;
            const double x = knee * std::pow(v, -p);
            const double jac = knee * p * std::pow(v, -p - 1.0);
            if (!std::isfinite(x) || !std::isfinite(jac)) return r;
            r = integrand(x);
            for (auto& e : r) e = e == 0.0 ? 0.0 : e * jac;
            return r;
        };
        const auto rest = integrate_vec<kMaxDerivativeOrder + 1>(tail, 0.0, 1.0, settings);
        for (int n = 0; n <= max_order; ++n) total[n] = head.value[n] + rest.value[n];
    } else {
        total = integrate_vec<kMaxDerivativeOrder + 1>(integrand, spec.lower, spec.upper, settings, scale).value;
    }
    for (int n = 0; n <= max_order; ++n) out[n] = 2.0 * spec.prefactor * total[n];
    return out;
}

/// zeta^(n)(j), n = 0..max_order, for zeta = exp(-g), from the derivatives of g.
///
/// zeta' = -g' zeta, and differentiating that product with Leibniz gives
/// zeta^(n) = -sum_{i<n} C(n-1, i) g^(i+1) zeta^(n-1-i).
inline ExponentDerivatives compose_exponential(const ExponentDerivatives& g, int max_order)
{
    ExponentDerivatives z{};
    z[0] = std::exp(-g[0]);
    for (int n = 1; n <= max_order; ++n) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += binomial(n - 1, i) * g[i + 1] * z[n - 1 - i];
        z[n] = -acc;
    }
    return z;
}

inline double k_function(const KFunctionSpec& spec, double j, const QuadratureSettings& settings = laplace_settings())
{
    spec.validate();
    if (j == 0.0) return 1.0;
    return std::exp(-exponent_derivatives(spec, j, 0, settings)[0]);
}

inline double k_function_derivative(const KFunctionSpec& spec, double j, int k,
                                    const QuadratureSettings& settings = laplace_settings())
{
    spec.validate();
    if (k < 0 || k >= spec.exponent || k > kMaxDerivativeOrder)
        throw UnsupportedOrder("order " + std::to_string(k) + " unsupported for exponent " +
                               std::to_string(spec.exponent));
    if (k == 0) return k_function(spec, j, settings);
    const auto g = exponent_derivatives(spec, j, k, settings);
    return compose_exponential(g, k)[k];
}

/// All derivatives 0..max_order of prod_i zeta_i(j) * exp(-linear * j).
///
/// The product of exponentials is the exponential of the summed exponents, so
/// the g-derivatives are accumulated first and composed once. `linear` carries
/// a deterministic term such as scaled noise power.
inline ExponentDerivatives product_laplace_derivatives(std::span<const KFunctionSpec> specs, double j, int max_order,
                                                       const QuadratureSettings& settings = laplace_settings(),
                                                       double linear = 0.0)
{
    if (max_order < 0 || max_order > kMaxDerivativeOrder)
        throw UnsupportedOrder("order " + std::to_string(max_order) + " exceeds " +
                               std::to_string(kMaxDerivativeOrder));
    ExponentDerivatives g{};
    for (const auto& s : specs) {
        const auto gi = exponent_derivatives(s, j, max_order, settings);
        for (int n = 0; n <= max_order; ++n) g[n] += gi[n];
    }
    g[0] += linear * j;
    if (max_order >= 1) g[1] += linear;
    return compose_exponential(g, max_order);
}

inline double product_laplace_derivative(std::span<const KFunctionSpec> specs, double j, int k,
                                         const QuadratureSettings& settings = laplace_settings())
{
    return product_laplace_derivatives(specs, j, k, settings)[k];
}

}  // namespace cv2x::numerics
