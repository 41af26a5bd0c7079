#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cv2x/analysis/association.hpp"
#include "cv2x/error.hpp"
#include "cv2x/numerics/quadrature.hpp"

namespace cv2x::analysis {

/// Nearest typical-road SBS (two-sided 1-D PPP).
inline double nearest_sbs_pdf(double x, double lambda_s) { return 2.0 * lambda_s * std::exp(-2.0 * lambda_s * x); }
inline double nearest_sbs_cdf(double x, double lambda_s) { return -std::expm1(-2.0 * lambda_s * x); }

/// Nearest MBS (planar PPP).
inline double nearest_mbs_pdf(double x, double lambda_m)
{
    return 2.0 * std::numbers::pi * lambda_m * x * std::exp(-std::numbers::pi * lambda_m * x * x);
}
inline double nearest_mbs_cdf(double x, double lambda_m) { return -std::expm1(-std::numbers::pi * lambda_m * x * x); }

/// Serving-distance law of the typical vehicle conditioned on an association
/// case. Supported pairs: (Case1, MBS), (Case2, MBS), (Case2, SBS),
/// (Case4, SBS), (CoupledM, MBS), (CoupledS, SBS).
class ConditionalDistance {
public:
    ConditionalDistance(const AssociationModel& model, AssociationCase c, ServingKind serving)
        : m_(model), case_(c), serving_(serving)
    {
        const bool ok = (serving == ServingKind::MBS &&
                         (c == AssociationCase::Case1 || c == AssociationCase::Case2 || c == AssociationCase::CoupledM)) ||
                        (serving == ServingKind::SBS &&
                         (c == AssociationCase::Case2 || c == AssociationCase::Case4 || c == AssociationCase::CoupledS));
        if (!ok)
            throw UnsupportedPair("no distance law for (" + std::string(to_string(c)) + ", " +
                                  std::string(channel::to_string(serving)) + ")");
        prob_ = assoc_prob(c, model);
        if (!(prob_ > 0.0))
            throw Error("conditional distance undefined: " + std::string(to_string(c)) + " has probability 0");
    }

    double probability() const { return prob_; }
    ServingKind serving() const { return serving_; }
    AssociationCase association_case() const { return case_; }

    /// Characteristic length of the law, used to map [0, inf) for quadrature.
    double scale() const
    {
        const auto& t = m_.intensities;
        // The conditioning factor can cut the law off well before the
        // unconditioned nearest-node length. The slower of the two keep
        // factors sets the reach, and which one that is depends on the side.
        if (serving_ == ServingKind::SBS) {
            const double k = case_ == AssociationCase::Case2 ? m_.b_ms : m_.a_ms;
            const double base = 1.0 / (2.0 * t.lambda_S);
            if (t.lambda_M == 0.0) return base;
            const double cut = std::pow(std::numbers::pi * t.lambda_M * std::pow(k, 2.0 / m_.alpha_m),
                                        -m_.alpha_m / (2.0 * m_.alpha_s));
            return std::min(base, cut);
        }
        const double base = 1.0 / std::sqrt(std::numbers::pi * t.lambda_M);
        if (t.lambda_S == 0.0) return base;
        const double k = case_ == AssociationCase::Case1 ? m_.b_ms : m_.a_ms;
        const double cut = std::pow(2.0 * t.lambda_S * std::pow(k, -1.0 / m_.alpha_s), -m_.alpha_s / m_.alpha_m);
        return std::min(base, cut);
    }

    double pdf(double x) const
    {
        if (std::isnan(x) || x < 0.0) throw ValidationError("distance must be >= 0");
        const auto& t = m_.intensities;
        if (serving_ == ServingKind::MBS) {
            // MBS at x must beat every typical-road SBS closer than K^(-1/alpha_S) x^(alpha_M/alpha_S).
            auto keep = [&](double k) {
                return std::exp(-2.0 * t.lambda_S * std::pow(k, -1.0 / m_.alpha_s) * std::pow(x, m_.alpha_m / m_.alpha_s));
            };
            const double base = nearest_mbs_pdf(x, t.lambda_M);
            if (base == 0.0) return 0.0;
            switch (case_) {
            case AssociationCase::Case1: return keep(m_.b_ms) * base / prob_;
            case AssociationCase::Case2: return (keep(m_.a_ms) - keep(m_.b_ms)) * base / prob_;
            default: return keep(m_.a_ms) * base / prob_;
            }
        }
        // SBS at x must beat every MBS closer than K^(1/alpha_M) x^(alpha_S/alpha_M).
        auto keep = [&](double k) {
            return std::exp(-std::numbers::pi * t.lambda_M * std::pow(k, 2.0 / m_.alpha_m) *
                            std::pow(x, 2.0 * m_.alpha_s / m_.alpha_m));
        };
        const double base = nearest_sbs_pdf(x, t.lambda_S);
        if (base == 0.0) return 0.0;
        if (case_ == AssociationCase::Case2) return (keep(m_.b_ms) - keep(m_.a_ms)) * base / prob_;
        return keep(m_.a_ms) * base / prob_;
    }

    double cdf(double x) const
    {
        if (x <= 0.0) return 0.0;
        if (std::isinf(x)) return 1.0;
        auto f = [&](double u) { return pdf(u); };
        return numerics::integrate(f, 0.0, x, association_settings());
    }

private:
    AssociationModel m_;
    AssociationCase case_;
    ServingKind serving_;
    double prob_ = 0.0;
};

/// \int_0^inf f(x) dx for integrands living on length `scale` that may carry
/// a logarithmic singularity at 0 (the SE integrand does). On [0, scale] the
/// substitution x = scale w^3 flattens the singularity.
template <class F>
double integrate_over_distance(const F& f, double scale, const numerics::QuadratureSettings& settings)
{
    auto near = [&](double w) {
        if (w <= 0.0) return 0.0;
        const double w2 = w * w;
        return 3.0 * scale * w2 * f(scale * w2 * w);
    };
    const double head = numerics::integrate(near, 0.0, 1.0, settings);
    const double tail = numerics::integrate(f, scale, std::numeric_limits<double>::infinity(), settings, scale);
    return head + tail;
}

inline double distance_pdf(AssociationCase c, ServingKind serving, double x, const AssociationModel& model)
{
    return ConditionalDistance(model, c, serving).pdf(x);
}

}  // namespace cv2x::analysis
