#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "cv2x/analysis/association.hpp"
#include "cv2x/analysis/distance.hpp"
#include "cv2x/analysis/interference.hpp"
#include "cv2x/numerics/laplace.hpp"
#include "cv2x/numerics/special.hpp"

namespace cv2x::analysis {

struct EvalSettings {
    numerics::QuadratureSettings outer = [] {
        numerics::QuadratureSettings s;
        s.rel_tol = 1e-5;
        s.abs_tol = 1e-10;
        return s;
    }();
    numerics::QuadratureSettings threshold = [] {
        numerics::QuadratureSettings s;
        s.rel_tol = 1e-6;
        s.abs_tol = 1e-10;
        return s;
    }();
    numerics::QuadratureSettings inner = [] {
        numerics::QuadratureSettings s = numerics::laplace_settings();
        s.rel_tol = 1e-8;
        return s;
    }();
    double t_max = 30.0;        ///< nats, first window of the SE threshold integral
    int max_extensions = 20;    ///< extra windows of length t_max before the result is flagged capped
    InterferenceOptions interference;
};

/// P(SIR > T | case, serving length x) for a Nakagami-m desired link, with
/// beta = T / (P G):
///
///     sum_{k<m} (-j)^k / k! * zeta^(k)(j),   j = m beta x^alpha.
inline double conditional_coverage(std::span<const KFunctionSpec> specs, const ServingLink& link, double x,
                                   double beta, double noise, const numerics::QuadratureSettings& inner)
{
    const double j = link.m * beta * std::pow(x, link.alpha);
    if (j == 0.0) return 1.0;
    if (!std::isfinite(j)) return 0.0;
    const int order = link.m - 1;
    const auto z = numerics::product_laplace_derivatives(specs, j, order, inner, noise);
    double sum = 0.0;
    double coeff = 1.0;
    for (int k = 0; k <= order; ++k) {
        sum += coeff * z[k];
        coeff *= -j / (k + 1);
    }
    return std::clamp(sum, 0.0, 1.0);
}

/// P(SIR > T | case) in the given direction, averaged over the serving distance.
inline double case_coverage(AssociationCase c, Direction dir, double threshold, const NetworkConfig& cfg,
                            const EvalSettings& settings = {})
{
    if (!(threshold > 0.0) || !std::isfinite(threshold)) throw ValidationError("threshold must be finite and > 0");
    const auto model = make_model(cfg);
    const ServingKind serving = serving_of(c, dir);
    const ConditionalDistance law(model, c, serving);
    const ServingLink link = serving_link(serving, dir, cfg);
    const double beta = threshold / link.power_gain;
    auto f = [&](double x) {
        const double p = law.pdf(x);
        if (p == 0.0) return 0.0;
        const auto specs = interference_specs(c, dir, x, cfg, model, settings.interference);
        return p * conditional_coverage(specs, link, x, beta, cfg.noise_power, settings.inner);
    };
    return integrate_over_distance(f, law.scale(), settings.outer);
}

/// Joint probability that the typical vehicle is served by `serving` in
/// direction `dir` and its SIR exceeds the (linear) threshold.
inline double coverage_prob(ServingKind serving, Direction dir, double threshold, const NetworkConfig& cfg,
                            const EvalSettings& settings = {})
{
    if (!(threshold > 0.0) || !std::isfinite(threshold)) throw ValidationError("threshold must be finite and > 0");
    std::vector<AssociationCase> cases;
    if (serving == ServingKind::MBS) {
        cases.push_back(AssociationCase::Case1);
        if (dir == Direction::DL) cases.push_back(AssociationCase::Case2);
    } else {
        if (dir == Direction::UL) cases.push_back(AssociationCase::Case2);
        cases.push_back(AssociationCase::Case4);
    }
    const auto model = make_model(cfg);
    double total = 0.0;
    for (auto c : cases) {
        const double p = assoc_prob(c, model);
        if (p <= 0.0) continue;
        total += p * case_coverage(c, dir, threshold, cfg, settings);
    }
    return total;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace cv2x::analysis
