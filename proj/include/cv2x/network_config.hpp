#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "cv2x/error.hpp"

namespace cv2x {

enum class Scenario { LOS, NLOS };

inline std::string_view to_string(Scenario s) { return s == Scenario::LOS ? "LOS" : "NLOS"; }

inline Scenario parse_scenario(std::string_view text)
{
    if (text == "LOS" || text == "los") return Scenario::LOS;
    if (text == "NLOS" || text == "nlos") return Scenario::NLOS;
    throw ValidationError("scenario must be LOS or NLOS, got '" + std::string(text) + "'");
}

/// Physical and statistical parameters of the network. Lengths in km,
/// densities per km (lines) or per km^2 (plane), powers in dBm, gains in dBi.
struct NetworkConfig {
    double lambda_m = 5.0;   ///< MBS density, nodes/km^2
    double lambda_l = 10.0;  ///< road (line process) density, km^-1
    double lambda_s = 10.0;  ///< SBS density along a road, nodes/km
    double lambda_v = 15.0;  ///< vehicle density along a road, nodes/km

    double p_m_dbm = 46.0;
    double p_s_dbm = 20.0;
    double p_v_dbm = 20.0;

    double g_m_dbi = 0.0;
    double g_s0_dbi = 0.0;
    double g_s1_dbi = -20.0;
    double g_v0_dbi = 0.0;
    double g_v1_dbi = -20.0;

    double alpha_m = 4.0;
    double alpha_s = 2.0;

    int m_m = 1;
    int m_s0 = 2;
    int m_s1 = 1;
    int m_v0 = 2;
    int m_v1 = 1;

    double shadow_std_m_db = 4.0;
    double shadow_std_s0_db = 2.0;
    double shadow_std_s1_db = 4.0;

    double v_max_kmh = 120.0;
    double lambda_max_per_km = 63.0;

    Scenario scenario = Scenario::LOS;
    double region_radius_km = 3.0;
    double noise_power = 0.0;  ///< watts
};

/// Scenario-dependent entries: LOS uses alpha_s = 2 with m = 2 on the
/// typical road, NLOS uses alpha_s = 4 with m = 1.
inline void apply_scenario(NetworkConfig& cfg, Scenario s)
{
    cfg.scenario = s;
    if (s == Scenario::LOS) {
        cfg.alpha_s = 2.0;
        cfg.m_s0 = 2;
        cfg.m_v0 = 2;
    } else {
        cfg.alpha_s = 4.0;
        cfg.m_s0 = 1;
        cfg.m_v0 = 1;
    }
}

inline NetworkConfig default_config(Scenario s = Scenario::LOS)
{
    NetworkConfig cfg;
    apply_scenario(cfg, s);
    return cfg;
}

/// Setting used for the analytic-vs-simulation comparisons: 5 MBS/km^2,
/// lambda_l = 1/pi, 15 vehicles/km, SBS/MBS density ratio 2.
inline NetworkConfig reference_config(Scenario s = Scenario::LOS)
{
    NetworkConfig cfg = default_config(s);
    cfg.lambda_m = 5.0;
    cfg.lambda_l = 1.0 / std::numbers::pi;
    cfg.lambda_v = 15.0;
    cfg.lambda_s = 2.0 * cfg.lambda_m;
    return cfg;
}

inline double dbm_to_watts(double p_dbm) { return std::pow(10.0, (p_dbm - 30.0) / 10.0); }

inline double dbi_to_linear(double g_dbi) { return std::pow(10.0, g_dbi / 10.0); }

/// A_{M,S} = P_M G_M / (P_S G_{S,0})
inline double a_ms(const NetworkConfig& c)
{
    return dbm_to_watts(c.p_m_dbm) * dbi_to_linear(c.g_m_dbi) / (dbm_to_watts(c.p_s_dbm) * dbi_to_linear(c.g_s0_dbi));
}

/// B_{M,S} = G_{V,1} / G_{V,0}
inline double b_ms(const NetworkConfig& c) { return dbi_to_linear(c.g_v1_dbi) / dbi_to_linear(c.g_v0_dbi); }

inline void validate(const NetworkConfig& c)
{
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ValidationError(what);
    };
    require(c.lambda_m >= 0.0 && std::isfinite(c.lambda_m), "lambda_m must be finite and >= 0");
    require(c.lambda_l >= 0.0 && std::isfinite(c.lambda_l), "lambda_l must be finite and >= 0");
    require(c.lambda_s >= 0.0 && std::isfinite(c.lambda_s), "lambda_s must be finite and >= 0");
    require(c.lambda_v >= 0.0 && std::isfinite(c.lambda_v), "lambda_v must be finite and >= 0");
    for (double p : {c.p_m_dbm, c.p_s_dbm, c.p_v_dbm}) require(std::isfinite(p), "transmit powers must be finite");
    for (double g : {c.g_m_dbi, c.g_s0_dbi, c.g_s1_dbi, c.g_v0_dbi, c.g_v1_dbi})
        require(std::isfinite(g), "antenna gains must be finite");
    require(c.alpha_m > 2.0, "alpha_m must be > 2");
    require(c.alpha_s >= 2.0, "alpha_s must be >= 2");
    for (int m : {c.m_m, c.m_s0, c.m_s1, c.m_v0, c.m_v1})
        require(m >= 1 && m <= 4, "Nakagami shapes must be integers in [1, 4]");
    for (double s : {c.shadow_std_m_db, c.shadow_std_s0_db, c.shadow_std_s1_db})
        require(s >= 0.0 && std::isfinite(s), "shadowing std devs must be >= 0");
    require(c.v_max_kmh > 0.0, "v_max_kmh must be > 0");
    require(c.lambda_max_per_km >= 0.0, "lambda_max_per_km must be >= 0");
    require(c.region_radius_km > 0.0 && std::isfinite(c.region_radius_km), "region_radius_km must be > 0");
    require(c.noise_power >= 0.0 && std::isfinite(c.noise_power), "noise_power must be >= 0");
    require(a_ms(c) > b_ms(c), "a_ms > b_ms violated: P_M G_M / (P_S G_S0) must exceed G_V1 / G_V0");
}

}  // namespace cv2x
