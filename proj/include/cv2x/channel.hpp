#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <string_view>

#include "cv2x/error.hpp"
#include "cv2x/network_config.hpp"

namespace cv2x::channel {

/// E[chi^(-dims/alpha)] for 10 log10(chi) ~ N(0, sigma_db^2).
inline double lognormal_fractional_moment(double sigma_db, double alpha, int dims)
{
    if (!(sigma_db >= 0.0)) throw ValidationError("sigma_db must be >= 0");
    if (!(alpha > 0.0)) throw ValidationError("alpha must be > 0");
    if (dims != 1 && dims != 2) throw ValidationError("dims must be 1 or 2");
    const double s = sigma_db * std::numbers::ln10 / 10.0;
    const double k = dims / alpha;
    return std::exp(0.5 * k * k * s * s);
}

/// Densities after absorbing shadowing into the point processes.
struct TransformedIntensities {
    double lambda_M = 0.0;   ///< MBSs, per km^2
    double lambda_S = 0.0;   ///< SBSs on the typical road, per km
    double lambda_V = 0.0;   ///< vehicles on the typical road, per km
    double lambda_Sa = 0.0;  ///< SBSs on other roads seen as a planar PPP, per km^2
    double lambda_Va = 0.0;  ///< vehicles on other roads, per km^2
};

inline TransformedIntensities transform_intensities(const NetworkConfig& c)
{
    TransformedIntensities t;
    const double typical = lognormal_fractional_moment(c.shadow_std_s0_db, c.alpha_s, 1);
    const double other = lognormal_fractional_moment(c.shadow_std_s1_db, c.alpha_s, 2);
    t.lambda_M = lognormal_fractional_moment(c.shadow_std_m_db, c.alpha_m, 2) * c.lambda_m;
    t.lambda_S = typical * c.lambda_s;
    t.lambda_V = typical * c.lambda_v;
    t.lambda_Sa = other * std::numbers::pi * c.lambda_l * c.lambda_s;
    t.lambda_Va = other * std::numbers::pi * c.lambda_l * c.lambda_v;
    return t;
}

enum class LinkClass {
    VM,   ///< vehicle - MBS
    VST,  ///< vehicle - SBS on the typical road
    VSO,  ///< vehicle - SBS on another road
};

enum class Direction { UL, DL };

inline std::string_view to_string(Direction d) { return d == Direction::UL ? "UL" : "DL"; }

struct LinkParams {
    double gain = 1.0;  ///< linear antenna gain
    int m = 1;
    double shadow_std_db = 0.0;
    double alpha = 4.0;
};

/// Per-class link constants. In DL the gain belongs to the transmitting BS;
/// in UL it is the vehicle's gain toward that BS (main lobe along the road,
/// side lobe elsewhere), so an MBS receiver sees G_V1.
inline LinkParams link_params(LinkClass cls, Direction dir, const NetworkConfig& c)
{
    switch (cls) {
    case LinkClass::VM:
        return {dbi_to_linear(dir == Direction::DL ? c.g_m_dbi : c.g_v1_dbi), c.m_m, c.shadow_std_m_db, c.alpha_m};
    case LinkClass::VST:
        return {dbi_to_linear(dir == Direction::DL ? c.g_s0_dbi : c.g_v0_dbi), dir == Direction::DL ? c.m_s0 : c.m_v0,
                c.shadow_std_s0_db, c.alpha_s};
    case LinkClass::VSO:
        return {dbi_to_linear(dir == Direction::DL ? c.g_s1_dbi : c.g_v1_dbi), dir == Direction::DL ? c.m_s1 : c.m_v1,
                c.shadow_std_s1_db, c.alpha_s};
    }
    throw Error("unknown link class");
}

/// Gamma(shape m, rate m): unit-mean Nakagami power gain.
template <class URBG>
double sample_fading(int m, URBG& rng)
{
    if (m < 1) throw ValidationError("Nakagami m must be >= 1");
    std::gamma_distribution<double> g(static_cast<double>(m), 1.0 / m);
    return g(rng);
}

/// Log-normal shadowing gain with zero dB mean.
template <class URBG>
double sample_shadowing(double sigma_db, URBG& rng)
{
    if (sigma_db <= 0.0) return 1.0;
    std::normal_distribution<double> n(0.0, sigma_db);
    return std::pow(10.0, n(rng) / 10.0);
}

enum class TxKind { MBS, SBS_TYPICAL, SBS_OTHER };

enum class ServingKind { MBS, SBS };

inline std::string_view to_string(ServingKind s) { return s == ServingKind::MBS ? "MBS" : "SBS"; }

inline void check_distance(double d)
{
    if (!(d > 0.0)) throw DegenerateDistance("link distance must be > 0, got " + std::to_string(d));
}

/// Received power at the typical vehicle from a BS of the given kind.
inline double received_power_dl(TxKind tx, double distance_km, double fading, double shadow, const NetworkConfig& c)
{
    check_distance(distance_km);
    switch (tx) {
    case TxKind::MBS:
        return dbm_to_watts(c.p_m_dbm) * dbi_to_linear(c.g_m_dbi) * fading * shadow * std::pow(distance_km, -c.alpha_m);
    case TxKind::SBS_TYPICAL:
        return dbm_to_watts(c.p_s_dbm) * dbi_to_linear(c.g_s0_dbi) * fading * shadow *
               std::pow(distance_km, -c.alpha_s);
    case TxKind::SBS_OTHER:
        return dbm_to_watts(c.p_s_dbm) * dbi_to_linear(c.g_s1_dbi) * fading * shadow *
               std::pow(distance_km, -c.alpha_s);
    }
    throw Error("unknown transmitter kind");
}

/// Received power at a BS of the serving kind from a vehicle. `same_road`
/// selects the main-lobe gain G_V0 for a vehicle on the SBS's own road; an
/// MBS always sees the side lobe G_V1 and the MBS path-loss exponent.
inline double received_power_ul(ServingKind serving, double distance_km, double fading, double shadow,
                                const NetworkConfig& c, bool same_road = true)
{
    check_distance(distance_km);
    const double pv = dbm_to_watts(c.p_v_dbm);
    if (serving == ServingKind::MBS)
        return pv * dbi_to_linear(c.g_v1_dbi) * fading * shadow * std::pow(distance_km, -c.alpha_m);
    const double g = dbi_to_linear(same_road ? c.g_v0_dbi : c.g_v1_dbi);
    return pv * g * fading * shadow * std::pow(distance_km, -c.alpha_s);
}

/// Greenshields: lambda = lambda_max (1 - v / v_max).
inline double speed_to_density(double v_kmh, const NetworkConfig& c)
{
    if (!(v_kmh >= 0.0) || !(v_kmh <= c.v_max_kmh))
        throw OutOfRange("speed " + std::to_string(v_kmh) + " km/h outside [0, " + std::to_string(c.v_max_kmh) + "]");
    return c.lambda_max_per_km * (1.0 - v_kmh / c.v_max_kmh);
}

}  // namespace cv2x::channel
