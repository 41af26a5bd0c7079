#pragma once

#include <cmath>
#include <limits>

#include "cv2x/analysis/coverage.hpp"

namespace cv2x::analysis {

/// Spectral efficiency in nats/s/Hz. `capped` is set when the threshold
/// integral had not decayed by the last extension window (e.g. no
/// interferers and no noise, where the true value is infinite).
struct SeResult {
    double value = 0.0;
    bool capped = false;
};

/// E[ln(1 + SIR) | case, x] = \int_0^inf P(SIR > e^t - 1 | x) dt.
inline SeResult se_given_distance(std::span<const KFunctionSpec> specs, const ServingLink& link, double x,
                                  double noise, const EvalSettings& settings)
{
    auto cov = [&](double t) {
        const double beta = std::expm1(t) / link.power_gain;
        return conditional_coverage(specs, link, x, beta, noise, settings.inner);
    };
    SeResult r;
    if (specs.empty() && noise == 0.0) {
        r.value = settings.t_max * (settings.max_extensions + 1);
        r.capped = true;
        return r;
    }
    r.value = numerics::integrate(cov, 0.0, settings.t_max, settings.threshold);
    double lo = settings.t_max;
    for (int i = 0; i < settings.max_extensions; ++i) {
        const double hi = lo + settings.t_max;
        const double chunk = numerics::integrate(cov, lo, hi, settings.threshold);
        r.value += chunk;
        lo = hi;
        if (chunk <= settings.threshold.rel_tol * r.value) return r;
    }
    r.capped = true;
    return r;
}

inline SeResult se_link(AssociationCase c, Direction dir, const NetworkConfig& cfg, const EvalSettings& settings = {})
{
    if (c == AssociationCase::Case3) throw UnsupportedPair("case3 has zero probability; no SE defined");
    const auto model = make_model(cfg);
    const ServingKind serving = serving_of(c, dir);
    const ConditionalDistance law(model, c, serving);
    const ServingLink link = serving_link(serving, dir, cfg);
    bool capped = false;
    auto f = [&](double x) {
        const double p = law.pdf(x);
        if (p == 0.0) return 0.0;
        const auto specs = interference_specs(c, dir, x, cfg, model, settings.interference);
        const auto s = se_given_distance(specs, link, x, cfg.noise_power, settings);
        capped = capped || s.capped;
        return p * s.value;
    };
    const double v = integrate_over_distance(f, law.scale(), settings.outer);
    return {v, capped};
}

enum class AccessMode { Decoupled, Coupled };

struct SystemSe {
    double uplink = 0.0;
    double downlink = 0.0;
    bool capped = false;

    double total() const { return uplink + downlink; }
};

/// Probability-weighted SE over association cases. Decoupled sums Cases
/// 1, 2 and 4; coupled uses the MBS with probability 1 - P(Case4) and the
/// SBS otherwise.
inline SystemSe system_average_se(const NetworkConfig& cfg, AccessMode mode, const EvalSettings& settings = {})
{
    const auto model = make_model(cfg);
    SystemSe out;
    auto accumulate = [&](AssociationCase c, double p) {
        if (p <= 0.0) return;
        const auto ul = se_link(c, Direction::UL, cfg, settings);
        const auto dl = se_link(c, Direction::DL, cfg, settings);
        out.uplink += p * ul.value;
        out.downlink += p * dl.value;
        out.capped = out.capped || ul.capped || dl.capped;
    };
    if (mode == AccessMode::Decoupled) {
        for (auto c : {AssociationCase::Case1, AssociationCase::Case2, AssociationCase::Case4})
            accumulate(c, assoc_prob(c, model));
    } else {
        accumulate(AssociationCase::CoupledM, assoc_prob(AssociationCase::CoupledM, model));
        accumulate(AssociationCase::CoupledS, assoc_prob(AssociationCase::CoupledS, model));
    }
    return out;
}

}  // namespace cv2x::analysis
