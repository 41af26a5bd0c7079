#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cv2x/config.hpp"
#include "cv2x/experiment.hpp"

using namespace cv2x;
using namespace cv2x::experiment;

namespace {

// Minimal RFC 4180 reader used to check that written rows round-trip.
std::vector<std::vector<std::string>> read_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows(1);
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            rows.back().push_back(field);
            field.clear();
        } else if (c == '\n') {
            rows.back().push_back(field);
            field.clear();
            rows.emplace_back();
        } else {
            field += c;
        }
    }
    if (rows.back().empty()) rows.pop_back();
    return rows;
}

}  // namespace

TEST(ConfigText, EmptyFileGivesTableDefaults)
{
    const auto spec = parse_spec("");
    ASSERT_EQ(spec.scenarios.size(), 1u);
    EXPECT_EQ(spec.scenarios[0], Scenario::LOS);
    const auto cfg = build_config(spec, Scenario::LOS);
    const auto def = default_config();
    for (const auto& f : config::network_fields())
        EXPECT_EQ(config::get_field(cfg, f.name), config::get_field(def, f.name)) << f.name;
}

TEST(ConfigText, CommentsBlankLinesAndOverrides)
{
    const auto spec = parse_spec("# network\n\nlambda_m = 2.5   # per km^2\nm_m=2\nscenario = nlos\n");
    const auto cfg = build_config(spec, spec.scenarios.front());
    EXPECT_EQ(cfg.lambda_m, 2.5);
    EXPECT_EQ(cfg.m_m, 2);
    EXPECT_EQ(cfg.alpha_s, 4.0);
}

TEST(ConfigText, UnknownKeyReportsItsLine)
{
    try {
        parse_spec("lambda_m = 1\n\nlambda_q = 3\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("lambda_q"), std::string::npos);
    }
}

TEST(ConfigText, MalformedLinesAreParseErrors)
{
    EXPECT_THROW(parse_spec("lambda_m 3\n"), ParseError);
    EXPECT_THROW(parse_spec("= 3\n"), ParseError);
    EXPECT_THROW(parse_spec("lambda_m =\n"), ParseError);
    EXPECT_THROW(parse_spec("lambda_m = 1\nlambda_m = 2\n"), ParseError);
    EXPECT_THROW(parse_spec("lambda_m = fast\n"), ParseError);
    EXPECT_THROW(parse_spec("m_m = 1.5\n"), ParseError);
    EXPECT_THROW(parse_spec("drops = -4\n"), ParseError);
    EXPECT_THROW(parse_spec("mode = sing\n"), ParseError);
    EXPECT_THROW(config::read_file("/nonexistent/cv2x.cfg"), ParseError);
}

TEST(ConfigText, ViolatedInvariantIsAValidationError)
{
    // g_v1 = g_v0 alone keeps A > B; equal powers and gains make A = B.
    EXPECT_NO_THROW(build_config(parse_spec("g_v1_dbi = 0\n"), Scenario::LOS));
    const auto spec = parse_spec("g_v1_dbi = 0\np_m_dbm = 20\n");
    EXPECT_THROW(build_config(spec, Scenario::LOS), ValidationError);
    EXPECT_THROW(build_config(parse_spec("alpha_m = 1.5\n"), Scenario::LOS), ValidationError);
}

TEST(ConfigText, FigurePresetThenExplicitKeys)
{
    const auto spec = parse_spec("drops = 50\nlambda_m = 3\n", "fig12");
    EXPECT_EQ(spec.name, "fig12");
    EXPECT_EQ(spec.drops, 50u);
    ASSERT_TRUE(spec.sweep);
    EXPECT_EQ(spec.sweep->key, "speed");
    EXPECT_EQ(spec.sweep->values, (std::vector<double>{0, 30, 60, 90, 115}));
    const auto cfg = build_config(spec, Scenario::NLOS);
    EXPECT_EQ(cfg.lambda_m, 3.0);
    EXPECT_EQ(cfg.lambda_s, 2.0);

    // A figure key in the file is applied before the keys above it.
    const auto from_file = parse_spec("drops = 7\nfigure = fig2b\n");
    EXPECT_EQ(from_file.drops, 7u);
    EXPECT_EQ(from_file.scenarios.front(), Scenario::NLOS);
    EXPECT_THROW(parse_spec("", "fig99"), ValidationError);
}

TEST(ConfigText, EveryFigurePresetBuilds)
{
    for (const auto& p : figure_presets()) {
        const auto spec = parse_spec("", std::string(p.name));
        EXPECT_NO_THROW(validate(spec)) << p.name;
        for (auto s : spec.scenarios) EXPECT_NO_THROW(build_config(spec, s)) << p.name;
        for (double v : spec.sweep->values)
            EXPECT_NO_THROW(config_at(build_config(spec, spec.scenarios[0]), spec.sweep, v)) << p.name << ' ' << v;
    }
}

TEST(Grid, RangesAndLists)
{
    EXPECT_EQ(parse_grid("0:1:3"), (std::vector<double>{0, 0.5, 1}));
    EXPECT_EQ(parse_grid("2:9:1"), (std::vector<double>{2}));
    EXPECT_EQ(parse_grid("1, 2.5 ,4"), (std::vector<double>{1, 2.5, 4}));
    const auto g = parse_grid("0.1:6.5:17");
    EXPECT_EQ(g.front(), 0.1);
    EXPECT_EQ(g.back(), 6.5);
    EXPECT_THROW(parse_grid("0:1"), ValidationError);
    EXPECT_THROW(parse_grid("0:1:0"), ValidationError);
    EXPECT_THROW(parse_grid("1,x"), ValidationError);
}

TEST(Grid, SweepKeys)
{
    EXPECT_EQ(parse_sweep("lambda_ratio:1:6:6").values.size(), 6u);
    EXPECT_EQ(parse_sweep("alpha_m:3,4").key, "alpha_m");
    EXPECT_THROW(parse_sweep("colour:1:2:2"), ValidationError);
    EXPECT_THROW(parse_sweep("lambda_ratio"), ValidationError);
    auto cfg = default_config();
    EXPECT_THROW(config_at(cfg, parse_sweep("speed:130"), 130), OutOfRange);
    EXPECT_EQ(config_at(cfg, parse_sweep("lambda_ratio:3"), 3).lambda_s, 3 * cfg.lambda_m);
}

TEST(Csv, NumbersAndQuoting)
{
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1e-300), "1e-300");
    EXPECT_EQ(format_number(std::nan("")), "");
    EXPECT_EQ(format_number(INFINITY), "inf");
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Csv, RowsRoundTrip)
{
    ResultRow r;
    r.experiment = "odd, \"name\"";
    r.scenario = "LOS";
    r.sweep_value = 2.0;
    r.metric_id = "assoc";
    r.case_label = "case2";
    r.analytic = 0.8660254037844386;
    r.simulated = 0.87;
    r.ci95 = 0.0045;
    r.drops = 20000;
    r.seed = 42;
    r.pass = true;
    std::ostringstream os;
    write_csv(os, {r});
    const auto rows = read_csv(os.str());
    ASSERT_EQ(rows.size(), 2u);
    ASSERT_EQ(rows[0].size(), 13u);
    ASSERT_EQ(rows[1].size(), 13u);
    EXPECT_EQ(rows[1][0], r.experiment);
    EXPECT_EQ(*config::to_double(rows[1][7]), *r.analytic);
    EXPECT_EQ(rows[1][6], "");
    EXPECT_EQ(rows[1][12], "pass");
}

TEST(Run, AnalyzeDefaultGivesProbabilitiesSummingToOne)
{
    const auto rows = run_experiment(parse_spec("mode = analyze\n"));
    ASSERT_EQ(rows.size(), 4u);
    double s = 0.0;
    for (const auto& r : rows) {
        EXPECT_EQ(r.metric_id, "assoc");
        EXPECT_FALSE(r.simulated);
        s += *r.analytic;
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(Run, CompareAddsPassFlags)
{
    auto spec = parse_spec("mode = compare\npreset = reference\ndrops = 4000\nseed = 3\nscenario = los,nlos\n");
    const auto rows = run_experiment(spec);
    ASSERT_EQ(rows.size(), 8u);
    for (const auto& r : rows) {
        ASSERT_TRUE(r.pass);
        EXPECT_TRUE(*r.pass) << r.scenario << ' ' << r.case_label;
        EXPECT_EQ(*r.drops, 4000u);
    }
}

TEST(Run, SimulateIsByteIdenticalOnRerun)
{
    auto spec = parse_spec("mode = simulate\npreset = reference\ndrops = 60\nseed = 5\nmetrics = se_link,coverage\n"
                           "thresholds_db = -5,5\n");
    std::ostringstream a, b;
    write_csv(a, run_experiment(spec));
    write_csv(b, run_experiment(spec));
    EXPECT_EQ(a.str(), b.str());
}

TEST(Run, PartialRowsReachTheSinkBeforeFailure)
{
    auto spec = parse_spec("mode = analyze\nsweep = speed:0,200\nscenario = los\n");
    std::vector<ResultRow> rows;
    EXPECT_THROW(run_experiment(spec, [&](const ResultRow& r) { rows.push_back(r); }), OutOfRange);
    EXPECT_EQ(rows.size(), 4u);
}

TEST(Run, StarvedQuadratureBudgetIsNonConvergence)
{
    const auto base = "mode = analyze\npreset = reference\nmetrics = coverage\n";
    EXPECT_NO_THROW(run_experiment(parse_spec(base)));
    EXPECT_THROW(run_experiment(parse_spec(std::string(base) + "quad_max_subdivisions = 1\n")), NonConvergence);
    EXPECT_THROW(parse_spec("quad_max_subdivisions = -1\n"), ParseError);
}
