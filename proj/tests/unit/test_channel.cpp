#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cv2x/channel.hpp"
#include "cv2x/network_config.hpp"

using namespace cv2x;
using namespace cv2x::channel;

TEST(Config, TableDefaults)
{
    const auto c = default_config();
    EXPECT_EQ(c.scenario, Scenario::LOS);
    EXPECT_EQ(c.alpha_s, 2.0);
    EXPECT_EQ(c.m_s0, 2);
    const auto n = default_config(Scenario::NLOS);
    EXPECT_EQ(n.alpha_s, 4.0);
    EXPECT_EQ(n.m_v0, 1);
    EXPECT_NEAR(a_ms(c), std::pow(10.0, 2.6), 1e-9);
    EXPECT_NEAR(b_ms(c), 0.01, 1e-15);
    EXPECT_NO_THROW(validate(c));
}

TEST(Config, ValidationNamesTheInvariant)
{
    auto c = default_config();
    c.alpha_m = 2.0;
    EXPECT_THROW(validate(c), ValidationError);
    c = default_config();
    c.m_s0 = 5;
    EXPECT_THROW(validate(c), ValidationError);
    c = default_config();
    c.p_m_dbm = c.p_s_dbm;
    c.g_v1_dbi = c.g_v0_dbi;
    try {
        validate(c);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("a_ms > b_ms"), std::string::npos);
    }
}

TEST(Channel, FractionalMomentMatchesSampling)
{
    std::mt19937_64 rng(4);
    for (auto [sigma, alpha, dims] : {std::tuple{4.0, 4.0, 2}, std::tuple{2.0, 2.0, 1}, std::tuple{6.0, 3.0, 1}}) {
        double s = 0.0;
        const int n = 400000;
        for (int i = 0; i < n; ++i) s += std::pow(sample_shadowing(sigma, rng), dims / alpha);
        // E[chi^(dims/alpha)] equals E[chi^(-dims/alpha)] for a zero-mean log-normal.
        EXPECT_NEAR(s / n, lognormal_fractional_moment(sigma, alpha, dims), 3e-3) << sigma;
    }
    EXPECT_EQ(lognormal_fractional_moment(0.0, 4.0, 2), 1.0);
    EXPECT_THROW(lognormal_fractional_moment(1.0, 4.0, 3), ValidationError);
}

TEST(Channel, TransformedIntensities)
{
    auto c = reference_config();
    c.shadow_std_m_db = c.shadow_std_s0_db = c.shadow_std_s1_db = 0.0;
    const auto t = transform_intensities(c);
    EXPECT_EQ(t.lambda_M, c.lambda_m);
    EXPECT_EQ(t.lambda_S, c.lambda_s);
    EXPECT_EQ(t.lambda_V, c.lambda_v);
    EXPECT_NEAR(t.lambda_Sa, std::numbers::pi * c.lambda_l * c.lambda_s, 1e-12);
    EXPECT_NEAR(t.lambda_Va, std::numbers::pi * c.lambda_l * c.lambda_v, 1e-12);
}

TEST(Channel, FadingHasUnitMeanAndVarianceOneOverM)
{
    std::mt19937_64 rng(8);
    for (int m : {1, 2, 4}) {
        double s = 0.0, s2 = 0.0;
        const int n = 300000;
        for (int i = 0; i < n; ++i) {
            const double h = sample_fading(m, rng);
            s += h;
            s2 += h * h;
        }
        const double mean = s / n;
        EXPECT_NEAR(mean, 1.0, 0.01);
        EXPECT_NEAR(s2 / n - mean * mean, 1.0 / m, 0.02);
    }
    EXPECT_THROW(sample_fading(0, rng), ValidationError);
    EXPECT_EQ(sample_shadowing(0.0, rng), 1.0);
}

TEST(Channel, ReceivedPower)
{
    const auto c = default_config();
    EXPECT_NEAR(received_power_dl(TxKind::MBS, 2.0, 1.0, 1.0, c), 39.810717 / 16.0, 1e-5);
    EXPECT_NEAR(received_power_dl(TxKind::SBS_TYPICAL, 0.5, 2.0, 1.0, c), 0.1 * 2.0 / 0.25, 1e-12);
    EXPECT_NEAR(received_power_dl(TxKind::SBS_OTHER, 1.0, 1.0, 1.0, c), 0.1 * 0.01, 1e-14);
    EXPECT_NEAR(received_power_ul(ServingKind::MBS, 1.0, 1.0, 1.0, c), 0.1 * 0.01, 1e-14);
    EXPECT_NEAR(received_power_ul(ServingKind::SBS, 1.0, 1.0, 1.0, c, false), 0.1 * 0.01, 1e-14);
    EXPECT_THROW(received_power_dl(TxKind::MBS, 0.0, 1.0, 1.0, c), DegenerateDistance);
}

TEST(Channel, LinkTableMirrorsGains)
{
    const auto c = default_config();
    EXPECT_EQ(link_params(LinkClass::VM, Direction::UL, c).gain, dbi_to_linear(c.g_v1_dbi));
    EXPECT_EQ(link_params(LinkClass::VST, Direction::UL, c).gain, dbi_to_linear(c.g_v0_dbi));
    EXPECT_EQ(link_params(LinkClass::VSO, Direction::DL, c).gain, dbi_to_linear(c.g_s1_dbi));
    EXPECT_EQ(link_params(LinkClass::VST, Direction::DL, c).m, c.m_s0);
}

TEST(Channel, Greenshields)
{
    const auto c = default_config();
    EXPECT_EQ(speed_to_density(0.0, c), 63.0);
    EXPECT_EQ(speed_to_density(c.v_max_kmh, c), 0.0);
    EXPECT_NEAR(speed_to_density(60.0, c), 31.5, 1e-12);
    EXPECT_THROW(speed_to_density(-1.0, c), OutOfRange);
    EXPECT_THROW(speed_to_density(121.0, c), OutOfRange);
}
