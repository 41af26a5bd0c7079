// cv2x analyze|simulate|compare: figure sweeps and analytic-vs-simulated reports.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <tuple>

#include "cv2x/error.hpp"
#include "cv2x/experiment.hpp"
#include "cv2x/geometry.hpp"
#include "cv2x/simulator.hpp"

namespace {

namespace ex = cv2x::experiment;

enum Exit : int { kOk = 0, kValidation = 2, kComparison = 3, kNonConvergence = 4 };

struct Flags {
    std::string config;
    std::string figure;
    std::string sweep;
    std::optional<std::uint64_t> drops;
    std::optional<std::uint64_t> seed;
    std::string scenario;
    std::string out;
    std::string estimator;
    std::string metrics;
    std::string thresholds_db;
    std::string dump_realization;
    std::string export_samples;
    bool no_ul_exclusion = false;
    bool case2_dl_finite_upper = false;
};

void add_flags(CLI::App* app, Flags& f)
{
    app->add_option("--config", f.config, "key = value config file");
    app->add_option("--figure", f.figure, "figure preset (fig2a fig2b fig5 fig8 fig9 fig11 fig12 fig14)");
    app->add_option("--sweep", f.sweep, "KEY:FROM:TO:STEPS or KEY:v1,v2,...");
    app->add_option("--drops", f.drops, "Monte Carlo drops");
    app->add_option("--seed", f.seed, "Monte Carlo seed");
    app->add_option("--scenario", f.scenario, "los, nlos or los,nlos");
    app->add_option("--out", f.out, "CSV output path (default: stdout)");
    app->add_option("--estimator", f.estimator, "typical-only or all-vehicles");
    app->add_option("--metrics", f.metrics, "comma list of assoc se_link se_case se_access se_system coverage");
    app->add_option("--thresholds-db", f.thresholds_db, "coverage thresholds, FROM:TO:STEPS or comma list");
    app->add_option("--dump-realization", f.dump_realization, "write drop 0 of the first scenario as CSV");
    app->add_option("--export-samples", f.export_samples, "write per-drop SIR samples (single point only)");
    app->add_flag("--no-ul-exclusion", f.no_ul_exclusion, "count every typical-road vehicle as UL interferer");
    app->add_flag("--case2-dl-finite-upper", f.case2_dl_finite_upper,
                  "truncate Case 2 DL SBS interference at the UL association radius");
}

ex::ExperimentSpec build_spec(ex::Mode mode, const Flags& f)
{
    const std::string text = f.config.empty() ? std::string() : cv2x::config::read_file(f.config);
    ex::ExperimentSpec spec = ex::parse_spec(text, f.figure);
    spec.mode = mode;
    if (!f.sweep.empty()) spec.sweep = ex::parse_sweep(f.sweep);
    if (f.drops) spec.drops = *f.drops;
    if (f.seed) spec.seed = *f.seed;
    if (!f.scenario.empty()) spec.scenarios = ex::parse_scenarios(f.scenario);
    if (!f.out.empty()) spec.out = f.out;
    if (!f.estimator.empty()) spec.estimator = cv2x::sim::parse_estimator(f.estimator);
    if (!f.metrics.empty()) {
        spec.metrics.clear();
        for (auto m : cv2x::config::split(f.metrics, ',')) spec.metrics.push_back(ex::parse_metric(m));
    }
    if (!f.thresholds_db.empty()) spec.thresholds_db = ex::parse_grid(f.thresholds_db);
    if (f.no_ul_exclusion) spec.ul_exclusion = false;
    if (f.case2_dl_finite_upper) spec.case2_dl_finite_upper = true;
    ex::validate(spec);
    for (auto s : spec.scenarios) ex::build_config(spec, s);
    return spec;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw cv2x::ValidationError("cannot write '" + path + "'");
    return os;
}

int run(ex::Mode mode, const Flags& f)
{
    const ex::ExperimentSpec spec = build_spec(mode, f);

    if (!f.dump_realization.empty()) {
        const auto cfg = ex::build_config(spec, spec.scenarios.front());
        auto os = open_out(f.dump_realization);
        cv2x::geometry::dump_realization(os, cv2x::geometry::build_realization(cfg, {spec.seed, 0}));
    }

    ex::ExperimentSpec run_spec = spec;
    std::optional<std::ofstream> samples;
    if (!f.export_samples.empty()) {
        if (mode == ex::Mode::Analyze) throw cv2x::ValidationError("--export-samples needs simulate or compare");
        if (spec.scenarios.size() != 1 || (spec.sweep && spec.sweep->values.size() != 1))
            throw cv2x::ValidationError("--export-samples needs a single scenario and sweep point");
        run_spec.keep_samples = true;
        samples.emplace(open_out(f.export_samples));
    }

    std::ofstream file;
    if (!spec.out.empty()) file = open_out(spec.out);
    std::ostream& os = spec.out.empty() ? std::cout : file;
    os << ex::kCsvHeader << '\n';

    std::size_t rows = 0, compared = 0, failed = 0;
    auto sink = [&](const ex::ResultRow& r) {
        ex::write_row(os, r);
        os.flush();
        ++rows;
        if (r.pass) {
            ++compared;
            if (!*r.pass) {
                ++failed;
                std::cerr << "FAIL " << r.scenario << ' ' << (r.sweep_value ? ex::format_number(*r.sweep_value) : "")
                          << ' ' << r.metric_id << ' ' << r.case_label << ' ' << r.direction << " analytic="
                          << ex::format_number(*r.analytic) << " simulated=" << ex::format_number(*r.simulated)
                          << " ci95=" << ex::format_number(*r.ci95) << '\n';
            }
        }
    };
    auto hook = [&](cv2x::Scenario, double, const cv2x::sim::MonteCarloResult& mc) {
        if (samples) cv2x::sim::export_samples(*samples, mc.samples);
    };
    ex::run_experiment(run_spec, sink, hook);

    std::ostream& summary = spec.out.empty() ? std::cerr : std::cout;
    summary << spec.name << " (" << ex::to_string(mode) << "): " << rows << " rows";
    if (mode == ex::Mode::Compare) summary << ", " << compared << " compared, " << failed << " failed";
    if (!spec.out.empty()) summary << ", written to " << spec.out;
    summary << '\n';
    return failed > 0 ? kComparison : kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"UL/DL decoupled access in C-V2X: analysis and Monte Carlo"};
    app.require_subcommand(1);
    Flags flags;
    std::optional<ex::Mode> mode;
    for (auto [name, m, help] : {std::tuple{"analyze", ex::Mode::Analyze, "analytic results only"},
                                 std::tuple{"simulate", ex::Mode::Simulate, "Monte Carlo results only"},
                                 std::tuple{"compare", ex::Mode::Compare, "both, with a pass/fail column"}}) {
        auto* sub = app.add_subcommand(name, help);
        add_flags(sub, flags);
        sub->callback([&mode, m = m] { mode = m; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }
    try {
        return run(*mode, flags);
    } catch (const cv2x::NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const cv2x::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
}
