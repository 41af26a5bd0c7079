#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "cv2x/analysis/association.hpp"
#include "cv2x/numerics/laplace.hpp"

namespace cv2x::analysis {

using numerics::KFunctionSpec;
using numerics::Measure;
using numerics::PathKernel;

struct InterferenceOptions {
    /// Case 2 DL: bound the typical-road SBS interferers to the association
    /// interval (x1, x2) instead of (x1, inf).
    bool case2_dl_finite_upper = false;
};

/// Desired link: transmit power x gain, path-loss exponent and fading shape.
struct ServingLink {
    double power_gain = 1.0;
    double alpha = 4.0;
    int m = 1;
};

inline ServingLink serving_link(ServingKind serving, Direction dir, const NetworkConfig& c)
{
    if (dir == Direction::DL) {
        if (serving == ServingKind::MBS) return {dbm_to_watts(c.p_m_dbm) * dbi_to_linear(c.g_m_dbi), c.alpha_m, c.m_m};
        return {dbm_to_watts(c.p_s_dbm) * dbi_to_linear(c.g_s0_dbi), c.alpha_s, c.m_s0};
    }
    if (serving == ServingKind::MBS) return {dbm_to_watts(c.p_v_dbm) * dbi_to_linear(c.g_v1_dbi), c.alpha_m, c.m_m};
    return {dbm_to_watts(c.p_v_dbm) * dbi_to_linear(c.g_v0_dbi), c.alpha_s, c.m_v0};
}

/// Interferer sets seen by the serving BS (UL) or the typical vehicle (DL)
/// when the serving link has effective length x.
inline std::vector<KFunctionSpec> interference_specs(AssociationCase c, Direction dir, double x,
                                                     const NetworkConfig& cfg, const AssociationModel& model,
                                                     const InterferenceOptions& opts = {})
{
    const auto& t = model.intensities;
    const double inf = std::numeric_limits<double>::infinity();
    const double pi = std::numbers::pi;
    const double pm = dbm_to_watts(cfg.p_m_dbm);
    const double ps = dbm_to_watts(cfg.p_s_dbm);
    const double pv = dbm_to_watts(cfg.p_v_dbm);
    const ServingKind serving = serving_of(c, dir);
    if (c == AssociationCase::Case3) throw UnsupportedPair("case3 has no interference model");

    std::vector<KFunctionSpec> out;
    auto add = [&](double a, double lo, double hi, double pg, double alpha, int m, Measure f) {
        if (a <= 0.0 || pg <= 0.0 || !(hi > lo)) return;
        out.push_back({a, lo, hi, PathKernel{pg, alpha, m}, m, f});
    };
    // Planar sets with alpha <= 2 have an unbounded exponent; cut them at the
    // simulation window.
    auto planar_upper = [&](double alpha) { return alpha > 2.0 ? inf : cfg.region_radius_km; };

    if (dir == Direction::DL) {
        const double upper_s1 = planar_upper(cfg.alpha_s);
        if (serving == ServingKind::MBS) {
            const double a_lo = std::pow(model.a_ms, -1.0 / model.alpha_s) * std::pow(x, model.alpha_m / model.alpha_s);
            const double b_lo = std::pow(model.b_ms, -1.0 / model.alpha_s) * std::pow(x, model.alpha_m / model.alpha_s);
            double s0_lo = a_lo;
            double s0_hi = inf;
            if (c == AssociationCase::Case1) s0_lo = b_lo;
            if (c == AssociationCase::Case2 && opts.case2_dl_finite_upper) s0_hi = b_lo;
            add(pi * t.lambda_M, x, inf, pm * dbi_to_linear(cfg.g_m_dbi), cfg.alpha_m, cfg.m_m, Measure::X);
            add(t.lambda_S, s0_lo, s0_hi, ps * dbi_to_linear(cfg.g_s0_dbi), cfg.alpha_s, cfg.m_s0, Measure::One);
        } else {
            const double m_lo = std::pow(model.a_ms, 1.0 / model.alpha_m) * std::pow(x, model.alpha_s / model.alpha_m);
            add(pi * t.lambda_M, m_lo, inf, pm * dbi_to_linear(cfg.g_m_dbi), cfg.alpha_m, cfg.m_m, Measure::X);
            add(t.lambda_S, x, inf, ps * dbi_to_linear(cfg.g_s0_dbi), cfg.alpha_s, cfg.m_s0, Measure::One);
        }
        add(pi * t.lambda_Sa, 0.0, upper_s1, ps * dbi_to_linear(cfg.g_s1_dbi), cfg.alpha_s, cfg.m_s1, Measure::X);
        return out;
    }

    if (serving == ServingKind::MBS) {
        const double pg = pv * dbi_to_linear(cfg.g_v1_dbi);
        add(t.lambda_V, x, inf, pg, cfg.alpha_m, cfg.m_m, Measure::One);
        add(pi * t.lambda_Va, 0.0, planar_upper(cfg.alpha_m), pg, cfg.alpha_m, cfg.m_m, Measure::X);
    } else {
        add(t.lambda_V, x, inf, pv * dbi_to_linear(cfg.g_v0_dbi), cfg.alpha_s, cfg.m_v0, Measure::One);
        add(pi * t.lambda_Va, 0.0, planar_upper(cfg.alpha_s), pv * dbi_to_linear(cfg.g_v1_dbi), cfg.alpha_s, cfg.m_v1,
            Measure::X);
    }
    return out;
}

}  // namespace cv2x::analysis
