#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cv2x/analysis/coverage.hpp"
#include "cv2x/analysis/spectral.hpp"
#include "cv2x/config.hpp"
#include "cv2x/error.hpp"
#include "cv2x/network_config.hpp"
#include "cv2x/simulator.hpp"

namespace cv2x::experiment {

using analysis::AssociationCase;
using channel::Direction;
using channel::ServingKind;

enum class Mode { Analyze, Simulate, Compare };

inline std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::Analyze: return "analyze";
    case Mode::Simulate: return "simulate";
    default: return "compare";
    }
}

inline Mode parse_mode(std::string_view s)
{
    if (s == "analyze") return Mode::Analyze;
    if (s == "simulate") return Mode::Simulate;
    if (s == "compare") return Mode::Compare;
    throw ValidationError("mode must be analyze, simulate or compare, got '" + std::string(s) + "'");
}

enum class Metric { Association, SeLink, SeCase, SeAccess, SeSystem, Coverage };

inline std::string_view to_string(Metric m)
{
    switch (m) {
    case Metric::Association: return "assoc";
    case Metric::SeLink: return "se_link";
    case Metric::SeCase: return "se_case";
    case Metric::SeAccess: return "se_access";
    case Metric::SeSystem: return "se_system";
    default: return "coverage";
    }
}

inline Metric parse_metric(std::string_view s)
{
    for (auto m : {Metric::Association, Metric::SeLink, Metric::SeCase, Metric::SeAccess, Metric::SeSystem,
                   Metric::Coverage})
        if (to_string(m) == s) return m;
    throw ValidationError("unknown metric '" + std::string(s) + "'");
}

/// Grid text is either FROM:TO:STEPS (inclusive, evenly spaced) or a comma list.
inline std::vector<double> parse_grid(std::string_view text)
{
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = config::split(text, ':');
        if (parts.size() != 3) throw ValidationError("grid must be FROM:TO:STEPS, got '" + std::string(text) + "'");
        const auto from = config::to_double(parts[0]);
        const auto to = config::to_double(parts[1]);
        const auto steps = config::to_int(parts[2]);
        if (!from || !to || !steps) throw ValidationError("grid must be FROM:TO:STEPS, got '" + std::string(text) + "'");
        if (*steps < 1) throw ValidationError("grid needs at least one step");
        if (*steps == 1) return {*from};
        for (std::int64_t i = 0; i < *steps; ++i)
            out.push_back(i + 1 == *steps ? *to : *from + (*to - *from) * static_cast<double>(i) / static_cast<double>(*steps - 1));
        return out;
    }
    for (auto p : config::split(text, ',')) {
        const auto v = config::to_double(p);
        if (!v) throw ValidationError("bad number '" + std::string(p) + "' in grid");
        out.push_back(*v);
    }
    return out;
}

struct Sweep {
    std::string key;
    std::vector<double> values;
};

inline bool is_sweep_key(std::string_view key)
{
    return key == "lambda_ratio" || key == "speed" || key == "threshold_db" || config::find_field(key) != nullptr;
}

/// KEY:FROM:TO:STEPS or KEY:v1,v2,...
inline Sweep parse_sweep(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ValidationError("sweep must be KEY:FROM:TO:STEPS");
    Sweep s;
    s.key = std::string(config::trim(text.substr(0, colon)));
    if (!is_sweep_key(s.key)) throw ValidationError("cannot sweep unknown parameter '" + s.key + "'");
    s.values = parse_grid(text.substr(colon + 1));
    if (s.values.empty()) throw ValidationError("sweep grid is empty");
    return s;
}

struct FigurePreset {
    std::string_view name;
    std::string_view description;
    config::BasePreset base;
    std::vector<Scenario> scenarios;
    std::vector<std::pair<std::string_view, double>> overrides;
    std::string_view sweep_key;
    std::vector<double> sweep_values;
    std::vector<Metric> metrics;
    std::vector<double> thresholds_db;
    std::uint64_t drops;
};

inline const std::vector<FigurePreset>& figure_presets()
{
    using enum Scenario;
    using config::BasePreset;
    static const std::vector<double> ratios{0.1, 0.5, 1, 2, 3, 4, 5, 6, 6.5};
    static const std::vector<double> speeds{0, 30, 60, 90, 115};
    static const std::vector<FigurePreset> presets = {
        {"fig2a", "association probabilities vs SBS/MBS density, LOS", BasePreset::Default, {LOS}, {},
         "lambda_ratio", ratios, {Metric::Association}, {0.0}, 10000},
        {"fig2b", "association probabilities vs SBS/MBS density, NLOS", BasePreset::Default, {NLOS}, {},
         "lambda_ratio", ratios, {Metric::Association}, {0.0}, 10000},
        {"fig5", "per-case link SE vs SBS/MBS density", BasePreset::Default, {LOS, NLOS}, {},
         "lambda_ratio", ratios, {Metric::SeLink, Metric::SeCase}, {0.0}, 2000},
        {"fig8", "decoupled vs coupled UL/DL SE", BasePreset::Reference, {LOS, NLOS}, {},
         "lambda_ratio", ratios, {Metric::SeAccess}, {0.0}, 2000},
        {"fig9", "system SE, decoupled vs coupled", BasePreset::Reference, {LOS, NLOS}, {},
         "lambda_ratio", ratios, {Metric::SeSystem, Metric::SeAccess}, {0.0}, 2000},
        {"fig11", "coverage vs SIR threshold", BasePreset::Reference, {LOS}, {},
         "lambda_ratio", {1, 2, 4, 6}, {Metric::Coverage}, parse_grid("-10:20:13"), 10000},
        {"fig12", "coverage vs vehicle speed", BasePreset::Reference, {NLOS},
         {{"lambda_m", 4.0}, {"lambda_s", 2.0}}, "speed", speeds, {Metric::Coverage}, {0.0}, 10000},
        {"fig14", "SE vs vehicle speed", BasePreset::Reference, {NLOS},
         {{"lambda_m", 5.0}, {"lambda_s", 2.5}}, "speed", speeds, {Metric::SeAccess, Metric::SeSystem}, {0.0}, 10000},
    };
    return presets;
}

inline const FigurePreset& find_figure(std::string_view name)
{
    for (const auto& p : figure_presets())
        if (p.name == name) return p;
    throw ValidationError("unknown figure '" + std::string(name) + "'");
}

struct ExperimentSpec {
    std::string name = "custom";
    Mode mode = Mode::Analyze;
    std::string figure;
    config::BasePreset base = config::BasePreset::Default;
    std::vector<Scenario> scenarios{Scenario::LOS};
    /// NetworkConfig assignments, applied in order on top of the base preset.
    std::vector<std::pair<std::string, double>> overrides;
    std::optional<Sweep> sweep;
    std::vector<Metric> metrics{Metric::Association};
    std::vector<double> thresholds_db{0.0};
    std::uint64_t drops = 10000;
    std::uint64_t seed = 1;
    std::string out;
    sim::Estimator estimator = sim::Estimator::TypicalOnly;
    bool ul_exclusion = true;
    bool case2_dl_finite_upper = false;
    bool keep_samples = false;
    /// Caps the subdivisions of every analytic integral; 0 keeps the defaults.
    std::uint64_t quad_max_subdivisions = 0;
};

inline void apply_figure(ExperimentSpec& spec, std::string_view name)
{
    const auto& p = find_figure(name);
    spec.name = std::string(p.name);
    spec.figure = std::string(p.name);
    spec.base = p.base;
    spec.scenarios = p.scenarios;
    for (const auto& [k, v] : p.overrides) spec.overrides.emplace_back(std::string(k), v);
    spec.sweep = Sweep{std::string(p.sweep_key), p.sweep_values};
    spec.metrics = p.metrics;
    spec.thresholds_db = p.thresholds_db;
    spec.drops = p.drops;
}

inline std::vector<Scenario> parse_scenarios(std::string_view s)
{
    std::vector<Scenario> out;
    for (auto p : config::split(s, ',')) out.push_back(parse_scenario(p));
    return out;
}

/// Applies one config line; every failure is reported against its line.
inline void apply_entry(ExperimentSpec& spec, const config::Entry& e)
{
    auto fail = [&](const std::string& why) -> void { throw ParseError(e.key + ": " + why, e.line); };
    auto as_u64 = [&]() -> std::uint64_t {
        const auto v = config::to_int(e.value);
        if (!v || *v < 0) fail("expected a non-negative integer, got '" + e.value + "'");
        return static_cast<std::uint64_t>(*v);
    };
    auto as_bool = [&]() -> bool {
        const auto v = config::to_bool(e.value);
        if (!v) fail("expected true or false, got '" + e.value + "'");
        return *v;
    };
    try {
        const std::string_view k = e.key;
        if (k == "figure") {
            apply_figure(spec, e.value);
        } else if (k == "name") {
            spec.name = e.value;
        } else if (k == "mode") {
            spec.mode = parse_mode(e.value);
        } else if (k == "preset") {
            spec.base = config::parse_preset(e.value);
        } else if (k == "scenario") {
            spec.scenarios = parse_scenarios(e.value);
        } else if (k == "sweep") {
            spec.sweep = parse_sweep(e.value);
        } else if (k == "drops") {
            spec.drops = as_u64();
        } else if (k == "seed") {
            spec.seed = as_u64();
        } else if (k == "out") {
            spec.out = e.value;
        } else if (k == "thresholds_db") {
            spec.thresholds_db = parse_grid(e.value);
        } else if (k == "estimator") {
            spec.estimator = sim::parse_estimator(e.value);
        } else if (k == "ul_exclusion") {
            spec.ul_exclusion = as_bool();
        } else if (k == "case2_dl_finite_upper") {
            spec.case2_dl_finite_upper = as_bool();
        } else if (k == "quad_max_subdivisions") {
            spec.quad_max_subdivisions = as_u64();
        } else if (k == "metrics") {
            spec.metrics.clear();
            for (auto m : config::split(e.value, ',')) spec.metrics.push_back(parse_metric(m));
        } else if (config::find_field(k)) {
            const auto v = config::to_double(e.value);
            if (!v) fail("expected a number, got '" + e.value + "'");
            NetworkConfig probe;
            config::set_field(probe, k, *v);
            spec.overrides.emplace_back(e.key, *v);
        } else {
            fail("unknown key");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError& ex) {
        throw ParseError(ex.what(), e.line);
    }
}

inline void validate(const ExperimentSpec& spec)
{
    if (spec.scenarios.empty()) throw ValidationError("at least one scenario is required");
    if (spec.metrics.empty()) throw ValidationError("at least one metric is required");
    if (spec.thresholds_db.empty()) throw ValidationError("thresholds_db is empty");
    for (double t : spec.thresholds_db)
        if (!std::isfinite(t)) throw ValidationError("thresholds must be finite");
    if (spec.sweep && spec.sweep->values.empty()) throw ValidationError("sweep grid is empty");
    if (spec.mode != Mode::Analyze && spec.drops < 1) throw ValidationError("drops must be >= 1");
}

/// Config for one scenario: base preset, then the scenario, then overrides.
inline NetworkConfig build_config(const ExperimentSpec& spec, Scenario s)
{
    NetworkConfig cfg = config::base_config(spec.base, s);
    for (const auto& [k, v] : spec.overrides) config::set_field(cfg, k, v);
    cv2x::validate(cfg);
    return cfg;
}

/// Parses config text. `figure` (e.g. from the command line) takes the place
/// of a figure key in the text; the figure preset is applied before any
/// other key so explicit keys win.
inline ExperimentSpec parse_spec(std::string_view text, const std::string& figure = {})
{
    const auto entries = config::parse_entries(text);
    ExperimentSpec spec;
    if (!figure.empty()) {
        apply_figure(spec, figure);
    } else {
        for (const auto& e : entries)
            if (e.key == "figure") apply_entry(spec, e);
    }
    for (const auto& e : entries)
        if (e.key != "figure") apply_entry(spec, e);
    return spec;
}

struct LoadedConfig {
    ExperimentSpec spec;
    NetworkConfig network;  ///< first scenario, validated
};

inline LoadedConfig load_config(const std::string& path, const std::string& figure = {})
{
    LoadedConfig out{parse_spec(config::read_file(path), figure), {}};
    validate(out.spec);
    out.network = build_config(out.spec, out.spec.scenarios.front());
    return out;
}

struct ResultRow {
    std::string experiment;
    std::string scenario;
    std::optional<double> sweep_value;
    std::string metric_id;
    std::string case_label;
    std::string direction;
    std::optional<double> threshold_db;
    std::optional<double> analytic;
    std::optional<double> simulated;
    std::optional<double> ci95;
    std::optional<std::uint64_t> drops;
    std::optional<std::uint64_t> seed;
    std::optional<bool> pass;
};

inline constexpr double kCompareAbsTol = 0.02;

inline bool within_tolerance(double analytic, double simulated, double ci95)
{
    return std::abs(analytic - simulated) <= std::max(kCompareAbsTol, 3.0 * ci95);
}

inline std::string format_number(double v)
{
    if (std::isnan(v)) return {};
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

inline std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline constexpr std::string_view kCsvHeader =
    "experiment,scenario,sweep_value,metric_id,case,direction,threshold_db,analytic,simulated,ci95,drops,seed,pass";

inline void write_row(std::ostream& os, const ResultRow& r)
{
    auto num = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
    auto u64 = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    os << csv_field(r.experiment) << ',' << csv_field(r.scenario) << ',' << num(r.sweep_value) << ','
       << csv_field(r.metric_id) << ',' << csv_field(r.case_label) << ',' << csv_field(r.direction) << ','
       << num(r.threshold_db) << ',' << num(r.analytic) << ',' << num(r.simulated) << ',' << num(r.ci95) << ','
       << u64(r.drops) << ',' << u64(r.seed) << ',' << (r.pass ? (*r.pass ? "pass" : "fail") : "") << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<ResultRow>& rows)
{
    os << kCsvHeader << '\n';
    for (const auto& r : rows) write_row(os, r);
}

/// Config at one sweep point. Speed maps to vehicle density by Greenshields.
inline NetworkConfig config_at(NetworkConfig cfg, const std::optional<Sweep>& sweep, double value)
{
    if (!sweep) return cfg;
    if (sweep->key == "lambda_ratio") {
        cfg.lambda_s = value * cfg.lambda_m;
    } else if (sweep->key == "speed") {
        cfg.lambda_v = channel::speed_to_density(value, cfg);
    } else if (sweep->key != "threshold_db") {
        config::set_field(cfg, sweep->key, value);
    }
    cv2x::validate(cfg);
    return cfg;
}

using RowSink = std::function<void(const ResultRow&)>;
/// Sees each Monte Carlo result (with samples when keep_samples is set).
using McHook = std::function<void(Scenario, double, const sim::MonteCarloResult&)>;

namespace detail {

inline const std::vector<AssociationCase>& link_cases()
{
    static const std::vector<AssociationCase> cases{AssociationCase::Case1, AssociationCase::Case2,
                                                    AssociationCase::Case4, AssociationCase::CoupledM,
                                                    AssociationCase::CoupledS};
    return cases;
}

/// Analytic quantities at one sweep point, each evaluated at most once.
class AnalyticPoint {
public:
    AnalyticPoint(const NetworkConfig& cfg, const analysis::EvalSettings& settings)
        : cfg_(cfg), settings_(settings), model_(analysis::make_model(cfg))
    {
    }

    double prob(AssociationCase c) const { return analysis::assoc_prob(c, model_); }

    /// Link SE, or nullopt when the case has probability zero.
    std::optional<double> se(AssociationCase c, Direction d)
    {
        const auto key = std::make_pair(static_cast<int>(c), static_cast<int>(d));
        if (auto it = se_.find(key); it != se_.end()) return it->second;
        std::optional<double> v;
        if (prob(c) > 0.0) v = analysis::se_link(c, d, cfg_, settings_).value;
        se_.emplace(key, v);
        return v;
    }

    double system(analysis::AccessMode mode, Direction d)
    {
        double total = 0.0;
        auto add = [&](AssociationCase c) {
            const double p = prob(c);
            if (p > 0.0) total += p * *se(c, d);
        };
        if (mode == analysis::AccessMode::Decoupled) {
            for (auto c : {AssociationCase::Case1, AssociationCase::Case2, AssociationCase::Case4}) add(c);
        } else {
            add(AssociationCase::CoupledM);
            add(AssociationCase::CoupledS);
        }
        return total;
    }

    double coverage(ServingKind s, Direction d, double threshold_db)
    {
        return analysis::coverage_prob(s, d, analysis::db_to_linear(threshold_db), cfg_, settings_);
    }

private:
    NetworkConfig cfg_;
    analysis::EvalSettings settings_;
    analysis::AssociationModel model_;
    std::map<std::pair<int, int>, std::optional<double>> se_;
};

}  // namespace detail

/// Runs every (scenario x sweep point x metric) and hands each row to `sink`
/// as soon as it is complete, so a failure part-way keeps earlier rows.
inline void run_experiment(const ExperimentSpec& spec, const RowSink& sink, const McHook& on_mc = {})
{
    validate(spec);
    const bool analyze = spec.mode != Mode::Simulate;
    const bool simulate = spec.mode != Mode::Analyze;

    analysis::EvalSettings settings;
    settings.interference.case2_dl_finite_upper = spec.case2_dl_finite_upper;
    if (spec.quad_max_subdivisions > 0) {
        const int cap = static_cast<int>(std::min<std::uint64_t>(spec.quad_max_subdivisions, 1u << 30));
        for (auto* q : {&settings.outer, &settings.threshold, &settings.inner}) q->max_subdivisions = cap;
    }

    bool association_only = true;
    for (auto m : spec.metrics) association_only = association_only && m == Metric::Association;

    for (Scenario scenario : spec.scenarios) {
        const NetworkConfig base = build_config(spec, scenario);
        const std::vector<double> points =
            spec.sweep ? spec.sweep->values : std::vector<double>{std::numeric_limits<double>::quiet_NaN()};

        for (double value : points) {
            const NetworkConfig cfg = config_at(base, spec.sweep, value);
            std::vector<double> thresholds_db = spec.thresholds_db;
            if (spec.sweep && spec.sweep->key == "threshold_db") thresholds_db = {value};

            std::optional<sim::MonteCarloResult> mc;
            if (simulate) {
                sim::SimOptions opts;
                opts.estimator = spec.estimator;
                opts.ul_exclusion = spec.ul_exclusion;
                opts.association_only = association_only;
                opts.thresholds.clear();
                for (double t : thresholds_db) opts.thresholds.push_back(analysis::db_to_linear(t));
                if (spec.sweep && spec.sweep->key == "speed") opts.thinning_lambda_v = base.lambda_max_per_km;
                opts.keep_samples = spec.keep_samples;
                mc = sim::run_monte_carlo(cfg, spec.drops, spec.seed, opts);
                if (on_mc) on_mc(scenario, value, *mc);
            }
            std::optional<detail::AnalyticPoint> an;
            if (analyze) an.emplace(cfg, settings);
            const bool full_sim = mc && spec.estimator == sim::Estimator::TypicalOnly;

            auto emit = [&](std::string_view metric, std::string case_label, std::string direction,
                            std::optional<double> threshold, std::optional<double> a,
                            std::optional<sim::EstimateWithCI> s) {
                ResultRow r;
                r.experiment = spec.name;
                r.scenario = std::string(to_string(scenario));
                if (spec.sweep) r.sweep_value = value;
                r.metric_id = std::string(metric);
                r.case_label = std::move(case_label);
                r.direction = std::move(direction);
                r.threshold_db = threshold;
                r.analytic = a;
                if (s && s->n > 0) {
                    r.simulated = s->mean;
                    r.ci95 = s->ci95;
                }
                if (mc) {
                    r.drops = spec.drops;
                    r.seed = spec.seed;
                }
                if (spec.mode == Mode::Compare && r.analytic && r.simulated)
                    r.pass = within_tolerance(*r.analytic, *r.simulated, *r.ci95);
                if (!r.analytic && !r.simulated) return;
                sink(r);
            };

            for (Metric metric : spec.metrics) {
                const auto id = to_string(metric);
                switch (metric) {
                case Metric::Association:
                    for (auto c : {AssociationCase::Case1, AssociationCase::Case2, AssociationCase::Case3,
                                   AssociationCase::Case4}) {
                        std::optional<double> a;
                        if (an) a = an->prob(c);
                        std::optional<sim::EstimateWithCI> s;
                        if (mc) s = mc->association[sim::slot(c)];
                        emit(id, std::string(analysis::to_string(c)), "", std::nullopt, a, s);
                    }
                    break;
                case Metric::SeLink:
                    for (auto c : detail::link_cases())
                        for (auto d : {Direction::UL, Direction::DL}) {
                            std::optional<double> a;
                            if (an) a = an->se(c, d);
                            std::optional<sim::EstimateWithCI> s;
                            if (full_sim) s = mc->se[sim::slot(c)][sim::slot(d)];
                            emit(id, std::string(analysis::to_string(c)), std::string(channel::to_string(d)),
                                 std::nullopt, a, s);
                        }
                    break;
                case Metric::SeCase:
                    for (auto c : {AssociationCase::Case1, AssociationCase::Case2, AssociationCase::Case4}) {
                        std::optional<double> a;
                        if (an) {
                            const double p = an->prob(c);
                            a = p > 0.0 ? p * (*an->se(c, Direction::UL) + *an->se(c, Direction::DL)) : 0.0;
                        }
                        std::optional<sim::EstimateWithCI> s;
                        if (full_sim) s = mc->case_weighted_se[sim::slot(c)];
                        emit(id, std::string(analysis::to_string(c)), "UL+DL", std::nullopt, a, s);
                    }
                    break;
                case Metric::SeAccess:
                    for (auto mode : {analysis::AccessMode::Decoupled, analysis::AccessMode::Coupled})
                        for (auto d : {Direction::UL, Direction::DL}) {
                            std::optional<double> a;
                            if (an) a = an->system(mode, d);
                            std::optional<sim::EstimateWithCI> s;
                            if (full_sim)
                                s = mode == analysis::AccessMode::Decoupled ? mc->system_se_decoupled[sim::slot(d)]
                                                                            : mc->system_se_coupled[sim::slot(d)];
                            emit(id, mode == analysis::AccessMode::Decoupled ? "decoupled" : "coupled",
                                 std::string(channel::to_string(d)), std::nullopt, a, s);
                        }
                    break;
                case Metric::SeSystem:
                    for (auto mode : {analysis::AccessMode::Decoupled, analysis::AccessMode::Coupled}) {
                        std::optional<double> a;
                        if (an) a = an->system(mode, Direction::UL) + an->system(mode, Direction::DL);
                        std::optional<sim::EstimateWithCI> s;
                        if (full_sim)
                            s = mode == analysis::AccessMode::Decoupled ? mc->system_total_decoupled
                                                                        : mc->system_total_coupled;
                        emit(id, mode == analysis::AccessMode::Decoupled ? "decoupled" : "coupled", "UL+DL",
                             std::nullopt, a, s);
                    }
                    break;
                case Metric::Coverage:
                    for (std::size_t t = 0; t < thresholds_db.size(); ++t)
                        for (auto k : {ServingKind::MBS, ServingKind::SBS})
                            for (auto d : {Direction::UL, Direction::DL}) {
                                std::optional<double> a;
                                if (an) a = an->coverage(k, d, thresholds_db[t]);
                                std::optional<sim::EstimateWithCI> s;
                                if (full_sim) s = mc->coverage[t][sim::slot(k)][sim::slot(d)];
                                emit(id, std::string(channel::to_string(k)), std::string(channel::to_string(d)),
                                     thresholds_db[t], a, s);
                            }
                    break;
                }
            }
        }
    }
}

inline std::vector<ResultRow> run_experiment(const ExperimentSpec& spec)
{
    std::vector<ResultRow> rows;
    run_experiment(spec, [&](const ResultRow& r) { rows.push_back(r); });
    return rows;
}

}  // namespace cv2x::experiment
