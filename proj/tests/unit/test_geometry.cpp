#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "cv2x/geometry.hpp"
#include "cv2x/network_config.hpp"

using namespace cv2x;
using namespace cv2x::geometry;

TEST(Geometry, LinePointsKeepPerpendicularDistance)
{
    const Line l{1.2, 0.7};
    for (double t : {-2.0, 0.0, 0.5, 3.0}) {
        const Point2 p = to_plane(l, t);
        // Projection onto the normal equals rho.
        EXPECT_NEAR(p.x * std::cos(l.theta) + p.y * std::sin(l.theta), l.rho, 1e-12);
        EXPECT_NEAR(p.norm(), std::hypot(l.rho, t), 1e-12);
    }
}

TEST(Geometry, HalfChord)
{
    EXPECT_NEAR(half_chord({0.0, 1.0}, 3.0), 3.0, 1e-15);
    EXPECT_NEAR(half_chord({-1.8, 0.2}, 3.0), 2.4, 1e-12);
    EXPECT_EQ(half_chord({3.5, 0.0}, 3.0), 0.0);
}

TEST(Geometry, StreamsAreDeterministicAndDistinct)
{
    const RngStream a{42, 7};
    auto e1 = a.engine(Purpose::Mbs);
    auto e2 = a.engine(Purpose::Mbs);
    EXPECT_EQ(e1(), e2());
    auto e3 = a.engine(Purpose::Roads);
    auto e4 = RngStream{42, 8}.engine(Purpose::Mbs);
    auto e5 = a.engine(Purpose::Mbs);
    const auto v = e5();
    EXPECT_NE(v, e3());
    EXPECT_NE(v, e4());
}

TEST(Geometry, PoissonCountsHaveTheRightMean)
{
    std::mt19937_64 rng(3);
    double sum = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(sample_mbs(2.0, 1.5, rng).size());
    const double mean = 2.0 * std::numbers::pi * 1.5 * 1.5;
    EXPECT_NEAR(sum / n, mean, 4.0 * std::sqrt(mean / n));
    EXPECT_EQ(sample_poisson(0.0, rng), 0u);
}

TEST(Geometry, MbsPointsAreUniformOnTheDisk)
{
    std::mt19937_64 rng(9);
    int inner = 0, total = 0;
    for (int i = 0; i < 2000; ++i)
        for (const auto& p : sample_mbs(3.0, 2.0, rng)) {
            EXPECT_LE(p.norm(), 2.0);
            inner += p.norm() < 1.0;
            ++total;
        }
    // Area fraction of the inner disk is 1/4.
    EXPECT_NEAR(static_cast<double>(inner) / total, 0.25, 0.01);
}

TEST(Geometry, RoadsHitTheDisk)
{
    std::mt19937_64 rng(1);
    const auto roads = sample_roads(2.0, 3.0, rng, true, true);
    ASSERT_FALSE(roads.empty());
    for (const auto& l : roads) {
        EXPECT_LT(std::abs(l.rho), 3.0);
        EXPECT_GE(l.theta, 0.0);
        EXPECT_LT(l.theta, std::numbers::pi);
    }
    EXPECT_EQ(roads.back().rho, 0.0);
    EXPECT_EQ(roads.back().theta, 0.0);
}

TEST(Geometry, RealizationHasTypicalRoadAndVehicle)
{
    NetworkConfig cfg = reference_config();
    const auto real = build_realization(cfg, {5, 0});
    EXPECT_EQ(real.typical_road_index, real.roads.size() - 1);
    EXPECT_EQ(real.typical_road().rho, 0.0);
    const auto& tv = real.vehicle_offsets[real.typical_road_index];
    ASSERT_FALSE(tv.empty());
    EXPECT_EQ(tv[kTypicalVehicleSlot], 0.0);
    for (std::size_t r = 0; r < real.roads.size(); ++r) {
        const double h = half_chord(real.roads[r], cfg.region_radius_km);
        for (double o : real.sbs_offsets[r]) EXPECT_LE(std::abs(o), h);
    }
}

TEST(Geometry, TypicalRoadIgnoresOtherRoads)
{
    // The typical road's nodes come from their own streams.
    NetworkConfig a = reference_config(), b = a;
    b.lambda_l = 3.0;
    const auto ra = build_realization(a, {11, 4});
    const auto rb = build_realization(b, {11, 4});
    EXPECT_EQ(ra.sbs_offsets[ra.typical_road_index], rb.sbs_offsets[rb.typical_road_index]);
    EXPECT_EQ(ra.mbs_points.size(), rb.mbs_points.size());
    const auto only = build_realization(b, {11, 4}, {false, true});
    EXPECT_EQ(only.roads.size(), 1u);
    EXPECT_EQ(only.sbs_offsets[0], rb.sbs_offsets[rb.typical_road_index]);
}

TEST(Geometry, DumpRealizationFormat)
{
    const auto real = build_realization(reference_config(), {2, 0});
    std::ostringstream os;
    dump_realization(os, real);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "kind,road_index,x_km,y_km");
    std::size_t rows = 0, typical = 0;
    while (std::getline(in, line)) {
        ++rows;
        typical += line.rfind("typical_vehicle,", 0) == 0;
    }
    std::size_t expect = real.mbs_points.size();
    for (std::size_t r = 0; r < real.roads.size(); ++r)
        expect += real.sbs_offsets[r].size() + real.vehicle_offsets[r].size();
    EXPECT_EQ(rows, expect);
    EXPECT_EQ(typical, 1u);
}
