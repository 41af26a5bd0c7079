#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "cv2x/channel.hpp"
#include "cv2x/error.hpp"
#include "cv2x/network_config.hpp"
#include "cv2x/numerics/quadrature.hpp"
#include "cv2x/numerics/special.hpp"

namespace cv2x::analysis {

using channel::Direction;
using channel::ServingKind;
using channel::TransformedIntensities;

/// Joint UL/DL association outcome of the typical vehicle.
enum class AssociationCase {
    Case1,     ///< UL = MBS, DL = MBS
    Case2,     ///< UL = SBS, DL = MBS
    Case3,     ///< UL = MBS, DL = SBS (empty region)
    Case4,     ///< UL = SBS, DL = SBS
    CoupledM,  ///< coupled access served by the MBS
    CoupledS,  ///< coupled access served by the SBS
};

inline std::string_view to_string(AssociationCase c)
{
    switch (c) {
    case AssociationCase::Case1: return "case1";
    case AssociationCase::Case2: return "case2";
    case AssociationCase::Case3: return "case3";
    case AssociationCase::Case4: return "case4";
    case AssociationCase::CoupledM: return "coupled_m";
    case AssociationCase::CoupledS: return "coupled_s";
    }
    return "?";
}

/// Serving BS type of a case in one direction.
inline ServingKind serving_of(AssociationCase c, Direction d)
{
    switch (c) {
    case AssociationCase::Case1: return ServingKind::MBS;
    case AssociationCase::Case2: return d == Direction::UL ? ServingKind::SBS : ServingKind::MBS;
    case AssociationCase::Case3: return d == Direction::UL ? ServingKind::MBS : ServingKind::SBS;
    case AssociationCase::Case4: return ServingKind::SBS;
    case AssociationCase::CoupledM: return ServingKind::MBS;
    case AssociationCase::CoupledS: return ServingKind::SBS;
    }
    throw Error("unknown association case");
}

/// Everything the association laws depend on.
struct AssociationModel {
    TransformedIntensities intensities;
    double a_ms = 1.0;
    double b_ms = 1.0;
    double alpha_m = 4.0;
    double alpha_s = 4.0;
};

inline AssociationModel make_model(const NetworkConfig& cfg)
{
    return {channel::transform_intensities(cfg), a_ms(cfg), b_ms(cfg), cfg.alpha_m, cfg.alpha_s};
}

enum class ProbabilityMethod { Auto, Quadrature, ClosedForm };

inline numerics::QuadratureSettings association_settings()
{
    numerics::QuadratureSettings s;
    s.rel_tol = 1e-11;
    s.abs_tol = 1e-15;
    return s;
}

/// Probability that the nearest typical-road SBS beats K x the nearest MBS:
///
///     I(K) = \int_0^inf 2 lambda_S exp(-pi lambda_M K^(2/alpha_M) x^(2 alpha_S/alpha_M) - 2 lambda_S x) dx
///
/// I(A) is P(DL = SBS) and I(B) is P(UL = SBS).
inline double sbs_preference_probability(const AssociationModel& m, double k, ProbabilityMethod method)
{
    const double ls = m.intensities.lambda_S;
    const double lm = m.intensities.lambda_M;
    if (ls == 0.0) return 0.0;
    if (lm == 0.0) return 1.0;
    const double c = std::numbers::pi * lm * std::pow(k, 2.0 / m.alpha_m);
    const bool equal_alpha = m.alpha_s == m.alpha_m;
    if (method == ProbabilityMethod::ClosedForm && !equal_alpha)
        throw ValidationError("closed form requires alpha_s == alpha_m");
    if (method == ProbabilityMethod::ClosedForm || (method == ProbabilityMethod::Auto && equal_alpha)) {
        const double r = ls / std::sqrt(c);
        return std::sqrt(std::numbers::pi) * r * numerics::erfcx(r);
    }
    const double p = 2.0 * m.alpha_s / m.alpha_m;
    auto f = [&](double x) { return 2.0 * ls * std::exp(-c * std::pow(x, p) - 2.0 * ls * x); };
    return numerics::integrate(f, 0.0, std::numeric_limits<double>::infinity(), association_settings(),
                               1.0 / (2.0 * ls));
}

inline double assoc_prob(AssociationCase c, const AssociationModel& m,
                         ProbabilityMethod method = ProbabilityMethod::Auto)
{
    switch (c) {
    case AssociationCase::Case3: return 0.0;
    case AssociationCase::Case1: return 1.0 - sbs_preference_probability(m, m.b_ms, method);
    case AssociationCase::Case2:
        return sbs_preference_probability(m, m.b_ms, method) - sbs_preference_probability(m, m.a_ms, method);
    case AssociationCase::Case4:
    case AssociationCase::CoupledS: return sbs_preference_probability(m, m.a_ms, method);
    case AssociationCase::CoupledM: return 1.0 - sbs_preference_probability(m, m.a_ms, method);
    }
    throw Error("unknown association case");
}

inline double assoc_prob(AssociationCase c, const NetworkConfig& cfg,
                         ProbabilityMethod method = ProbabilityMethod::Auto)
{
    return assoc_prob(c, make_model(cfg), method);
}

/// (P1, P2, P4), each checked to lie in [0, 1] and to sum to one.
inline std::array<double, 3> assoc_prob_sum_check(const AssociationModel& m,
                                                  ProbabilityMethod method = ProbabilityMethod::Auto,
                                                  double tolerance = 1e-6)
{
    const double ib = sbs_preference_probability(m, m.b_ms, method);
    const double ia = sbs_preference_probability(m, m.a_ms, method);
    const std::array<double, 3> p{1.0 - ib, ib - ia, ia};
    for (double v : p)
        if (!(v >= -tolerance && v <= 1.0 + tolerance))
            throw ConservationViolation("association probability " + std::to_string(v) + " outside [0, 1]");
    const double sum = p[0] + p[1] + p[2];
    if (!(std::abs(sum - 1.0) <= tolerance))
        throw ConservationViolation("association probabilities sum to " + std::to_string(sum));
    return p;
}

}  // namespace cv2x::analysis
