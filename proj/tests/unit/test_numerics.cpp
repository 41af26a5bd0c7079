#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "cv2x/numerics/laplace.hpp"
#include "cv2x/numerics/quadrature.hpp"
#include "cv2x/numerics/special.hpp"
#include "oracles.hpp"

using namespace cv2x;
using namespace cv2x::numerics;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

KFunctionSpec line_spec(double a, double lo, double pg, double alpha, int m)
{
    return {a, lo, kInf, PathKernel{pg, alpha, m}, m, Measure::One};
}

KFunctionSpec plane_spec(double a, double lo, double hi, double pg, double alpha, int m)
{
    return {a, lo, hi, PathKernel{pg, alpha, m}, m, Measure::X};
}

}  // namespace

TEST(Special, ErfcMatchesIntegralOracle)
{
    for (double x : {-1.5, 0.0, 0.3, 1.0, 2.5, 4.0})
        EXPECT_NEAR(numerics::erfc(x), oracle::erfc(x), 1e-12 + 1e-9 * numerics::erfc(x)) << x;
}

TEST(Special, ErfcxAgreesWithDefinitionAndAsymptotics)
{
    for (double x : {0.0, 0.1, 0.5, 1.0, 3.0, 5.0, 10.0}) {
        const double direct = std::exp(x * x) * std::erfc(x);
        EXPECT_NEAR(numerics::erfcx(x), direct, 1e-12 * direct) << x;
    }
    // erfcx(x) ~ 1/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6)) for large x.
    for (double x : {30.0, 100.0, 1e4}) {
        const double approx =
            (1.0 - 0.5 / (x * x) + 0.75 / std::pow(x, 4) - 1.875 / std::pow(x, 6)) / (x * std::sqrt(std::numbers::pi));
        EXPECT_NEAR(numerics::erfcx(x), approx, 1e-9 * approx) << x;
    }
}

TEST(Special, Combinatorics)
{
    EXPECT_EQ(rising_factorial(2.0, 3), 24.0);
    EXPECT_EQ(rising_factorial(1.5, 0), 1.0);
    EXPECT_EQ(factorial(5), 120.0);
    EXPECT_EQ(binomial(5, 2), 10.0);
    EXPECT_EQ(binomial(3, 4), 0.0);
}

TEST(Quadrature, KnownIntegrals)
{
    EXPECT_NEAR(integrate([](double x) { return std::exp(-x); }, 0.0, kInf), 1.0, 1e-10);
    EXPECT_NEAR(integrate([](double x) { return x > 0 ? std::log(x) : 0.0; }, 0.0, 1.0), -1.0, 1e-8);
    EXPECT_NEAR(integrate([](double x) { return std::exp(-x * x); }, 0.0, kInf), std::sqrt(std::numbers::pi) / 2, 1e-10);
    EXPECT_NEAR(integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, kInf, {}, 1.0), std::numbers::pi / 2, 1e-8);
    EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, std::numbers::pi, 0.0), -2.0, 1e-12);
}

TEST(Quadrature, VectorValuedComponentsAreIndependent)
{
    auto f = [](double x) { return std::array<double, 2>{x, x * x}; };
    const auto r = integrate_vec<2>(f, 0.0, 3.0);
    EXPECT_NEAR(r.value[0], 4.5, 1e-12);
    EXPECT_NEAR(r.value[1], 9.0, 1e-12);
}

TEST(Quadrature, ExhaustedBudgetRaisesNonConvergence)
{
    QuadratureSettings s;
    s.max_subdivisions = 3;
    s.rel_tol = 1e-14;
    s.abs_tol = 1e-300;
    EXPECT_THROW(integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, s), NonConvergence);
}

TEST(Quadrature, RejectsBadSettingsAndLimits)
{
    QuadratureSettings s;
    s.rel_tol = 0.0;
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, 1.0, s), ValidationError);
    EXPECT_THROW(integrate([](double) { return 1.0; }, -kInf, 1.0), Error);
    EXPECT_THROW(integrate([](double) { return 1.0; }, std::nan(""), 1.0), Error);
}

TEST(Laplace, KFunctionAtZeroIsExactlyOne)
{
    EXPECT_EQ(k_function(line_spec(3.0, 0.1, 1e-3, 4.0, 2), 0.0), 1.0);
    EXPECT_EQ(k_function(plane_spec(2.0, 0.0, kInf, 5.0, 4.0, 1), 0.0), 1.0);
}

TEST(Laplace, EmptyFieldIsOne)
{
    EXPECT_EQ(k_function(line_spec(0.0, 0.1, 1.0, 4.0, 1), 3.0), 1.0);
}

TEST(Laplace, LineFieldMatchesMonteCarloOracle)
{
    // Two-sided line field, density 2 per side, beyond 0.2, Rayleigh and m = 2.
    for (int m : {1, 2}) {
        const auto spec = line_spec(2.0, 0.2, 1.0, 4.0, m);
        const double j = 5e-3;
        const auto mc = oracle::mc_laplace(2.0, 0.2, 200.0, 1.0, 4.0, m, false, j, 200000, 7 + m);
        EXPECT_NEAR(k_function(spec, j), mc.mean, 4.0 * mc.stderr_ + 1e-6) << "m=" << m;
    }
}

TEST(Laplace, PlaneFieldMatchesMonteCarloOracle)
{
    const double lambda = 3.0;
    const auto spec = plane_spec(std::numbers::pi * lambda, 0.1, 2.0, 1.0, 3.0, 1);
    const double j = 2e-3;
    const auto mc = oracle::mc_laplace(lambda, 0.1, 2.0, 1.0, 3.0, 1, true, j, 200000, 11);
    EXPECT_NEAR(k_function(spec, j), mc.mean, 4.0 * mc.stderr_ + 1e-6);
}

TEST(Laplace, WholePlaneClosedFormMatchesQuadrature)
{
    // Tiny lower limit forces the quadrature path.
    for (int m : {1, 2, 3}) {
        const auto closed = plane_spec(2.0, 0.0, kInf, 4.0, 4.0, m);
        const auto numeric = plane_spec(2.0, 1e-9, kInf, 4.0, 4.0, m);
        for (double j : {0.01, 1.0, 50.0}) {
            const auto a = exponent_derivatives(closed, j, 2);
            const auto b = exponent_derivatives(numeric, j, 2);
            for (int n = 0; n <= 2; ++n) EXPECT_NEAR(a[n], b[n], 1e-6 * std::abs(b[n])) << m << ' ' << j << ' ' << n;
        }
    }
}

TEST(Laplace, DerivativesMatchRichardson)
{
    const auto spec = line_spec(1.5, 0.05, 2.0, 3.5, 3);
    const double j = 0.4;
    QuadratureSettings tight = laplace_settings();
    tight.rel_tol = 1e-13;
    auto f = [&](double t) { return k_function(spec, t, tight); };
    for (int k : {1, 2}) {
        const double expect = oracle::richardson_derivative(f, j, k, 0.05 * j);
        EXPECT_NEAR(k_function_derivative(spec, j, k, tight), expect, 1e-6 * std::abs(expect)) << k;
    }
}

TEST(Laplace, DerivativeSignsAlternate)
{
    // zeta is completely monotone: (-1)^k zeta^(k) >= 0.
    const auto spec = line_spec(1.0, 0.1, 1.0, 4.0, 4);
    for (int k = 0; k <= 3; ++k) EXPECT_GE((k % 2 ? -1.0 : 1.0) * k_function_derivative(spec, 0.7, k), 0.0) << k;
}

TEST(Laplace, OrderMustBeBelowExponent)
{
    EXPECT_THROW(k_function_derivative(line_spec(1.0, 0.1, 1.0, 4.0, 2), 1.0, 2), UnsupportedOrder);
    EXPECT_THROW(exponent_derivatives(line_spec(1.0, 0.1, 1.0, 4.0, 4), 1.0, 4), UnsupportedOrder);
}

TEST(Laplace, DivergentUnboundedFieldIsReported)
{
    EXPECT_THROW(k_function(plane_spec(1.0, 0.0, kInf, 1.0, 2.0, 1), 1.0), NonConvergence);
    EXPECT_THROW(k_function(line_spec(1.0, 0.1, 1.0, 1.0, 1), 1.0), NonConvergence);
}

TEST(Laplace, InvalidSpecsAreRejected)
{
    auto s = line_spec(1.0, 0.1, 1.0, 4.0, 1);
    s.upper = 0.05;
    EXPECT_THROW(k_function(s, 1.0), ValidationError);
    s = line_spec(-1.0, 0.1, 1.0, 4.0, 1);
    EXPECT_THROW(k_function(s, 1.0), ValidationError);
}

TEST(Laplace, ProductIsProductOfFactors)
{
    const std::vector<KFunctionSpec> specs{line_spec(1.0, 0.1, 1.0, 4.0, 2), plane_spec(2.0, 0.0, kInf, 3.0, 4.0, 2)};
    const double j = 0.3;
    const auto z = product_laplace_derivatives(specs, j, 1);
    const double f0 = k_function(specs[0], j), f1 = k_function(specs[1], j);
    EXPECT_NEAR(z[0], f0 * f1, 1e-12);
    const double d0 = k_function_derivative(specs[0], j, 1), d1 = k_function_derivative(specs[1], j, 1);
    EXPECT_NEAR(z[1], d0 * f1 + f0 * d1, 1e-10 * std::abs(z[1]));
}

TEST(Laplace, LinearTermActsAsDeterministicExponential)
{
    const double j = 0.8, c = 1.7;
    const auto z = product_laplace_derivatives({}, j, 3, laplace_settings(), c);
    for (int k = 0; k <= 3; ++k) EXPECT_NEAR(z[k], std::pow(-c, k) * std::exp(-c * j), 1e-14) << k;
}

TEST(Laplace, ComposeExponentialOfPolynomial)
{
    // g(j) = j^2: zeta = e^{-j^2}, zeta' = -2j zeta, zeta'' = (4j^2 - 2) zeta, zeta''' = (12j - 8j^3) zeta.
    const double j = 0.6;
    const ExponentDerivatives g{j * j, 2 * j, 2.0, 0.0};
    const auto z = compose_exponential(g, 3);
    const double e = std::exp(-j * j);
    EXPECT_NEAR(z[1], -2 * j * e, 1e-14);
    EXPECT_NEAR(z[2], (4 * j * j - 2) * e, 1e-14);
    EXPECT_NEAR(z[3], (12 * j - 8 * j * j * j) * e, 1e-14);
}

// Property: for random valid specs the Laplace transform lies in (0, 1] and
// is non-increasing in j.
TEST(LaplaceProperty, BoundedAndMonotone)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 40; ++t) {
        const int m = 1 + static_cast<int>(u(rng) * 4) % 4;
        const bool planar = u(rng) < 0.5;
        const double alpha = planar ? 2.5 + 2.0 * u(rng) : 1.5 + 3.0 * u(rng);
        KFunctionSpec s{0.1 + 5 * u(rng), 0.01 + u(rng), kInf, PathKernel{0.01 + 10 * u(rng), alpha, m}, m,
                        planar ? Measure::X : Measure::One};
        double prev = 1.0;
        for (double j : {0.01, 0.1, 1.0, 10.0}) {
            const double v = k_function(s, j);
            EXPECT_GT(v, 0.0);
            EXPECT_LE(v, prev + 1e-12);
            prev = v;
        }
    }
}
