#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include "cv2x/network_config.hpp"

namespace cv2x::geometry {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    double norm() const { return std::hypot(x, y); }
};

inline double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Road in normal form: signed distance `rho` from the origin along the unit
/// normal at angle `theta` in [0, pi).
struct Line {
    double rho = 0.0;
    double theta = 0.0;
};

/// Point at signed `offset` along the line from the foot of the perpendicular.
inline Point2 to_plane(const Line& line, double offset)
{
    const double c = std::cos(line.theta);
    const double s = std::sin(line.theta);
    return {line.rho * c - offset * s, line.rho * s + offset * c};
}

/// Half length of the chord a line cuts from the disk of radius r.
inline double half_chord(const Line& line, double r)
{
    const double h2 = r * r - line.rho * line.rho;
    return h2 > 0.0 ? std::sqrt(h2) : 0.0;
}

/// Independent random sub-streams of one Monte Carlo drop.
enum class Purpose : std::uint32_t {
    Mbs = 1,
    Roads = 2,
    Sbs = 3,
    Vehicles = 4,
    TypicalSbs = 5,
    TypicalVehicles = 6,
    BsShadow = 7,   ///< long-term shadowing of BS - typical vehicle links
    BsFading = 8,   ///< fast fading of DL links and of the typical vehicle's UL
    UlLinks = 9,    ///< shadowing/fading of interfering vehicles toward the UL serving BS
    UlCoupled = 10, ///< same, toward the DL serving BS when it differs
    AllVehicles = 11,
    Thinning = 12,
    Test = 99,
};

/// Keyed random source: identical (seed, stream_id, purpose) always yields
/// the same engine state.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    std::mt19937_64 engine(Purpose purpose) const
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32),
                          static_cast<std::uint32_t>(purpose)};
        return std::mt19937_64(seq);
    }
};

template <class URBG>
std::uint64_t sample_poisson(double mean, URBG& rng)
{
    if (!(mean > 0.0)) return 0;
    std::poisson_distribution<std::uint64_t> dist(mean);
    return dist(rng);
}

template <class URBG>
std::vector<Point2> sample_mbs(double density, double radius, URBG& rng)
{
    const auto n = sample_poisson(density * std::numbers::pi * radius * radius, rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point2> pts;
    pts.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double r = radius * std::sqrt(u(rng));
        const double phi = 2.0 * std::numbers::pi * u(rng);
        pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return pts;
}

/// Poisson line process hitting the disk: (rho, theta) uniform on
/// (-R, R) x [0, pi) with mean count 2 pi lambda_l R. With `include_typical`
/// a line through the origin is appended last.
template <class URBG>
std::vector<Line> sample_roads(double density, double radius, URBG& rng, bool include_typical,
                               bool typical_theta_zero = false)
{
    const auto n = sample_poisson(2.0 * std::numbers::pi * density * radius, rng);
    std::uniform_real_distribution<double> rho(-radius, radius);
    std::uniform_real_distribution<double> theta(0.0, std::numbers::pi);
    std::vector<Line> lines;
    lines.reserve(n + 1);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double r = rho(rng);
        lines.push_back({r, theta(rng)});
    }
    if (include_typical) {
        const double t = theta(rng);
        lines.push_back({0.0, typical_theta_zero ? 0.0 : t});
    }
    return lines;
}

/// 1-D Poisson process on the chord of `line` inside the disk.
template <class URBG>
std::vector<double> sample_points_on_line(const Line& line, double density, double radius, URBG& rng)
{
    const double h = half_chord(line, radius);
    const auto n = sample_poisson(2.0 * h * density, rng);
    std::uniform_real_distribution<double> u(-h, h);
    std::vector<double> offsets;
    offsets.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) offsets.push_back(u(rng));
    return offsets;
}

/// Index of the typical vehicle inside vehicle_offsets[typical_road_index].
inline constexpr std::size_t kTypicalVehicleSlot = 0;

struct NetworkRealization {
    std::vector<Point2> mbs_points;
    std::vector<Line> roads;
    std::vector<std::vector<double>> sbs_offsets;
    std::vector<std::vector<double>> vehicle_offsets;
    std::size_t typical_road_index = 0;
    double region_radius = 0.0;

    const Line& typical_road() const { return roads[typical_road_index]; }
};

struct RealizationOptions {
    bool typical_theta_zero = false;
    /// Skip the other roads and their nodes (enough for association statistics).
    bool typical_road_only = false;
};

/// One drop of the Palm-conditioned model: typical road through the origin
/// with the typical vehicle at offset 0.
inline NetworkRealization build_realization(const NetworkConfig& cfg, const RngStream& rng,
                                            const RealizationOptions& opts = {})
{
    NetworkRealization out;
    out.region_radius = cfg.region_radius_km;
    const double r = cfg.region_radius_km;

    auto mbs_rng = rng.engine(Purpose::Mbs);
    out.mbs_points = sample_mbs(cfg.lambda_m, r, mbs_rng);

    auto road_rng = rng.engine(Purpose::Roads);
    out.roads = sample_roads(opts.typical_road_only ? 0.0 : cfg.lambda_l, r, road_rng, true, opts.typical_theta_zero);
    out.typical_road_index = out.roads.size() - 1;

    // The typical road has its own streams so that its nodes do not depend on
    // how many other roads were drawn.
    auto sbs_rng = rng.engine(Purpose::Sbs);
    auto veh_rng = rng.engine(Purpose::Vehicles);
    auto tsbs_rng = rng.engine(Purpose::TypicalSbs);
    auto tveh_rng = rng.engine(Purpose::TypicalVehicles);
    out.sbs_offsets.reserve(out.roads.size());
    out.vehicle_offsets.reserve(out.roads.size());
    for (std::size_t i = 0; i < out.roads.size(); ++i) {
        const bool typical = i == out.typical_road_index;
        out.sbs_offsets.push_back(sample_points_on_line(out.roads[i], cfg.lambda_s, r, typical ? tsbs_rng : sbs_rng));
        out.vehicle_offsets.push_back(
            sample_points_on_line(out.roads[i], cfg.lambda_v, r, typical ? tveh_rng : veh_rng));
    }
    auto& typical = out.vehicle_offsets[out.typical_road_index];
    typical.insert(typical.begin() + kTypicalVehicleSlot, 0.0);
    return out;
}

/// Writes one `kind,road_index,x_km,y_km` record per node. MBS rows carry
/// road_index -1; the typical vehicle is tagged `typical_vehicle`.
inline void dump_realization(std::ostream& os, const NetworkRealization& real, char delimiter = ',')
{
    os << "kind" << delimiter << "road_index" << delimiter << "x_km" << delimiter << "y_km" << '\n';
    auto row = [&](const char* kind, long road, const Point2& p) {
        os << kind << delimiter << road << delimiter << p.x << delimiter << p.y << '\n';
    };
    for (const auto& p : real.mbs_points) row("mbs", -1, p);
    for (std::size_t i = 0; i < real.roads.size(); ++i) {
        for (double off : real.sbs_offsets[i]) row("sbs", static_cast<long>(i), to_plane(real.roads[i], off));
        for (std::size_t k = 0; k < real.vehicle_offsets[i].size(); ++k) {
            const bool typical = i == real.typical_road_index && k == kTypicalVehicleSlot;
            row(typical ? "typical_vehicle" : "vehicle", static_cast<long>(i),
                to_plane(real.roads[i], real.vehicle_offsets[i][k]));
        }
    }
}

}  // namespace cv2x::geometry
