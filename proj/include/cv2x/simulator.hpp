#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cv2x/analysis/association.hpp"
#include "cv2x/channel.hpp"
#include "cv2x/error.hpp"
#include "cv2x/geometry.hpp"
#include "cv2x/network_config.hpp"

namespace cv2x::sim {

using analysis::AssociationCase;
using channel::Direction;
using channel::ServingKind;
using geometry::NetworkRealization;
using geometry::Point2;

enum class Estimator { TypicalOnly, AllVehicles };

inline Estimator parse_estimator(std::string_view s)
{
    if (s == "typical-only") return Estimator::TypicalOnly;
    if (s == "all-vehicles") return Estimator::AllVehicles;
    throw ValidationError("estimator must be typical-only or all-vehicles, got '" + std::string(s) + "'");
}

struct SimOptions {
    Estimator estimator = Estimator::TypicalOnly;
    /// Drop typical-road vehicles that are effectively closer to the UL
    /// serving BS than the typical vehicle (mirrors the analytic lower limit).
    bool ul_exclusion = true;
    /// Only sample what association needs: MBSs and the typical road.
    bool association_only = false;
    bool typical_theta_zero = false;
    /// Linear SIR thresholds at which joint coverage is estimated.
    std::vector<double> thresholds{1.0};
    bool keep_samples = false;
    /// When > 0, vehicles are sampled at this density and each one is kept
    /// with probability lambda_v / thinning_lambda_v. Runs that differ only
    /// in lambda_v then share every vehicle they have in common.
    double thinning_lambda_v = 0.0;
};

/// A candidate BS as seen by the typical vehicle.
struct Candidate {
    std::size_t index = 0;
    double distance = 0.0;   ///< physical, km
    double effective = 0.0;  ///< chi^(-1/alpha) * distance
    double shadow = 1.0;
    Point2 position;
};

struct AssociationOutcome {
    AssociationCase association = AssociationCase::Case1;
    ServingKind ul = ServingKind::MBS;
    ServingKind dl = ServingKind::MBS;
    std::optional<Candidate> mbs;  ///< strongest (effectively nearest) MBS
    std::optional<Candidate> sbs;  ///< strongest typical-road SBS

    const Candidate& serving(Direction d) const
    {
        const ServingKind k = d == Direction::UL ? ul : dl;
        return k == ServingKind::MBS ? *mbs : *sbs;
    }
};

/// Max average received power rule on effective distances. Ties go to the MBS.
inline AssociationOutcome associate(const std::optional<Candidate>& mbs, const std::optional<Candidate>& sbs,
                                    const NetworkConfig& cfg)
{
    if (!mbs && !sbs) throw NoCandidate("no MBS and no typical-road SBS in the window");
    AssociationOutcome out;
    out.mbs = mbs;
    out.sbs = sbs;
    auto mbs_wins = [&](double k) {
        if (!sbs) return true;
        if (!mbs) return false;
        return k * std::pow(mbs->effective, -cfg.alpha_m) >= std::pow(sbs->effective, -cfg.alpha_s);
    };
    out.dl = mbs_wins(a_ms(cfg)) ? ServingKind::MBS : ServingKind::SBS;
    out.ul = mbs_wins(b_ms(cfg)) ? ServingKind::MBS : ServingKind::SBS;
    if (out.ul == ServingKind::MBS)
        out.association = out.dl == ServingKind::MBS ? AssociationCase::Case1 : AssociationCase::Case3;
    else
        out.association = out.dl == ServingKind::MBS ? AssociationCase::Case2 : AssociationCase::Case4;
    return out;
}

inline double effective_distance(double d, double shadow, double alpha) { return std::pow(shadow, -1.0 / alpha) * d; }

/// Shadowing of every MBS and typical-road SBS toward the typical vehicle,
/// in realization order (MBSs first). These long-term gains are shared by
/// UL and DL.
struct BsShadowing {
    std::vector<double> mbs;
    std::vector<double> sbs;
};

template <class URBG>
BsShadowing sample_bs_shadowing(const NetworkRealization& real, const NetworkConfig& cfg, URBG& rng)
{
    BsShadowing s;
    s.mbs.reserve(real.mbs_points.size());
    for (std::size_t i = 0; i < real.mbs_points.size(); ++i)
        s.mbs.push_back(channel::sample_shadowing(cfg.shadow_std_m_db, rng));
    const auto& offs = real.sbs_offsets[real.typical_road_index];
    s.sbs.reserve(offs.size());
    for (std::size_t i = 0; i < offs.size(); ++i) s.sbs.push_back(channel::sample_shadowing(cfg.shadow_std_s0_db, rng));
    return s;
}

/// Effectively nearest MBS and typical-road SBS to `at`.
inline std::pair<std::optional<Candidate>, std::optional<Candidate>>
strongest_candidates(const NetworkRealization& real, const BsShadowing& sh, const NetworkConfig& cfg, Point2 at = {})
{
    std::optional<Candidate> best_m;
    for (std::size_t i = 0; i < real.mbs_points.size(); ++i) {
        const double d = geometry::distance(real.mbs_points[i], at);
        channel::check_distance(d);
        const double e = effective_distance(d, sh.mbs[i], cfg.alpha_m);
        if (!best_m || e < best_m->effective) best_m = Candidate{i, d, e, sh.mbs[i], real.mbs_points[i]};
    }
    std::optional<Candidate> best_s;
    const auto& road = real.typical_road();
    const auto& offs = real.sbs_offsets[real.typical_road_index];
    for (std::size_t i = 0; i < offs.size(); ++i) {
        const Point2 p = geometry::to_plane(road, offs[i]);
        const double d = geometry::distance(p, at);
        channel::check_distance(d);
        const double e = effective_distance(d, sh.sbs[i], cfg.alpha_s);
        if (!best_s || e < best_s->effective) best_s = Candidate{i, d, e, sh.sbs[i], p};
    }
    return {best_m, best_s};
}

inline constexpr double kInfiniteSir = std::numeric_limits<double>::infinity();

inline double sir_from(double signal, double interference, double noise)
{
    const double den = interference + noise;
    if (den <= 0.0) return kInfiniteSir;
    return signal / den;
}

/// DL SIR at the typical vehicle. Fading is drawn for every BS in a fixed
/// order (MBSs, typical-road SBSs, then other-road SBSs with their
/// shadowing) so that the draw sequence does not depend on the association.
template <class URBG>
double compute_sir_dl(const AssociationOutcome& out, const NetworkRealization& real, const BsShadowing& sh,
                      const NetworkConfig& cfg, URBG& rng)
{
    const bool serve_m = out.dl == ServingKind::MBS;
    const std::size_t serving = out.serving(Direction::DL).index;
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t i = 0; i < real.mbs_points.size(); ++i) {
        const double h = channel::sample_fading(cfg.m_m, rng);
        const double p = channel::received_power_dl(channel::TxKind::MBS, real.mbs_points[i].norm(), h, sh.mbs[i], cfg);
        if (serve_m && i == serving) signal = p;
        else interference += p;
    }
    const auto& troad = real.typical_road();
    const auto& toffs = real.sbs_offsets[real.typical_road_index];
    for (std::size_t i = 0; i < toffs.size(); ++i) {
        const double h = channel::sample_fading(cfg.m_s0, rng);
        const double d = geometry::to_plane(troad, toffs[i]).norm();
        const double p = channel::received_power_dl(channel::TxKind::SBS_TYPICAL, d, h, sh.sbs[i], cfg);
        if (!serve_m && i == serving) signal = p;
        else interference += p;
    }
    for (std::size_t r = 0; r < real.roads.size(); ++r) {
        if (r == real.typical_road_index) continue;
        for (double off : real.sbs_offsets[r]) {
            const double chi = channel::sample_shadowing(cfg.shadow_std_s1_db, rng);
            const double h = channel::sample_fading(cfg.m_s1, rng);
            const double d = geometry::to_plane(real.roads[r], off).norm();
            interference += channel::received_power_dl(channel::TxKind::SBS_OTHER, d, h, chi, cfg);
        }
    }
    return sir_from(signal, interference, cfg.noise_power);
}

/// UL SIR at the BS `rx` (an MBS, or an SBS on the typical road) for the
/// typical vehicle. Every other vehicle transmits; typical-road vehicles
/// effectively closer to `rx` than the typical vehicle are dropped when
/// `exclusion` is set.
/// Per-road flags of vehicles that transmit; empty means all of them.
using VehicleMask = std::vector<std::vector<bool>>;

template <class URBG>
double compute_sir_ul(ServingKind rx_kind, const Candidate& rx, const NetworkRealization& real,
                      const NetworkConfig& cfg, bool exclusion, URBG& rng, const VehicleMask& active = {})
{
    const Direction ul = Direction::UL;
    const auto own = channel::link_params(rx_kind == ServingKind::MBS ? channel::LinkClass::VM : channel::LinkClass::VST,
                                          ul, cfg);
    const auto other =
        channel::link_params(rx_kind == ServingKind::MBS ? channel::LinkClass::VM : channel::LinkClass::VSO, ul, cfg);
    const double pv = dbm_to_watts(cfg.p_v_dbm);

    const double h0 = channel::sample_fading(own.m, rng);
    const double signal = pv * own.gain * h0 * rx.shadow * std::pow(rx.distance, -own.alpha);

    double interference = 0.0;
    for (std::size_t r = 0; r < real.roads.size(); ++r) {
        const bool typical_road = r == real.typical_road_index;
        const auto& lp = typical_road ? own : other;
        const auto& offs = real.vehicle_offsets[r];
        for (std::size_t k = 0; k < offs.size(); ++k) {
            if (typical_road && k == geometry::kTypicalVehicleSlot) continue;
            const double chi = channel::sample_shadowing(lp.shadow_std_db, rng);
            const double h = channel::sample_fading(lp.m, rng);
            if (!active.empty() && !active[r][k]) continue;
            const double d = geometry::distance(geometry::to_plane(real.roads[r], offs[k]), rx.position);
            channel::check_distance(d);
            if (typical_road && exclusion && effective_distance(d, chi, lp.alpha) < rx.effective) continue;
            interference += pv * lp.gain * h * chi * std::pow(d, -lp.alpha);
        }
    }
    return sir_from(signal, interference, cfg.noise_power);
}

/// Everything measured at the typical vehicle in one drop.
struct DropRecord {
    std::uint64_t drop_id = 0;
    AssociationCase association = AssociationCase::Case1;
    ServingKind ul = ServingKind::MBS;
    ServingKind dl = ServingKind::MBS;
    double mbs_distance = kInfiniteSir;  ///< effective distance to the strongest MBS (inf if none)
    double sbs_distance = kInfiniteSir;  ///< effective distance to the strongest typical-road SBS
    double sir_dl = 0.0;
    double sir_ul = 0.0;
    double sir_ul_coupled = 0.0;  ///< UL SIR at the DL serving BS
};

inline DropRecord simulate_drop(const NetworkConfig& cfg, std::uint64_t seed, std::uint64_t drop_id,
                                const SimOptions& opts)
{
    const geometry::RngStream rs{seed, drop_id};
    const bool thin = opts.thinning_lambda_v > 0.0 && !opts.association_only;
    NetworkConfig sample_cfg = cfg;
    if (thin) {
        if (cfg.lambda_v > opts.thinning_lambda_v) throw ValidationError("lambda_v exceeds the thinning density");
        sample_cfg.lambda_v = opts.thinning_lambda_v;
    }
    const auto real = geometry::build_realization(sample_cfg, rs, {opts.typical_theta_zero, opts.association_only});
    VehicleMask active;
    if (thin) {
        auto keep_rng = rs.engine(geometry::Purpose::Thinning);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double p = cfg.lambda_v / opts.thinning_lambda_v;
        active.resize(real.roads.size());
        for (std::size_t r = 0; r < real.roads.size(); ++r) {
            active[r].resize(real.vehicle_offsets[r].size());
            for (std::size_t k = 0; k < active[r].size(); ++k) active[r][k] = u(keep_rng) < p;
        }
        active[real.typical_road_index][geometry::kTypicalVehicleSlot] = true;
    }
    auto shadow_rng = rs.engine(geometry::Purpose::BsShadow);
    const auto sh = sample_bs_shadowing(real, cfg, shadow_rng);
    const auto [m, s] = strongest_candidates(real, sh, cfg);
    const auto out = associate(m, s, cfg);

    DropRecord rec;
    rec.drop_id = drop_id;
    rec.association = out.association;
    rec.ul = out.ul;
    rec.dl = out.dl;
    if (m) rec.mbs_distance = m->effective;
    if (s) rec.sbs_distance = s->effective;
    if (opts.association_only) return rec;

    auto fading_rng = rs.engine(geometry::Purpose::BsFading);
    rec.sir_dl = compute_sir_dl(out, real, sh, cfg, fading_rng);
    auto ul_rng = rs.engine(geometry::Purpose::UlLinks);
    rec.sir_ul = compute_sir_ul(out.ul, out.serving(Direction::UL), real, cfg, opts.ul_exclusion, ul_rng, active);
    if (out.ul == out.dl) {
        rec.sir_ul_coupled = rec.sir_ul;
    } else {
        auto cpl_rng = rs.engine(geometry::Purpose::UlCoupled);
        rec.sir_ul_coupled =
            compute_sir_ul(out.dl, out.serving(Direction::DL), real, cfg, opts.ul_exclusion, cpl_rng, active);
    }
    return rec;
}

/// Case counts over every vehicle of the drop, each associating with its
/// strongest MBS and the strongest SBS on its own road.
inline std::array<std::uint64_t, 4> all_vehicle_case_counts(const NetworkConfig& cfg, std::uint64_t seed,
                                                            std::uint64_t drop_id, const SimOptions& opts)
{
    const geometry::RngStream rs{seed, drop_id};
    const auto real = geometry::build_realization(cfg, rs, {opts.typical_theta_zero, false});
    auto rng = rs.engine(geometry::Purpose::AllVehicles);
    std::array<std::uint64_t, 4> counts{};
    for (std::size_t r = 0; r < real.roads.size(); ++r) {
        for (double voff : real.vehicle_offsets[r]) {
            const Point2 v = geometry::to_plane(real.roads[r], voff);
            std::optional<Candidate> best_m;
            for (std::size_t i = 0; i < real.mbs_points.size(); ++i) {
                const double chi = channel::sample_shadowing(cfg.shadow_std_m_db, rng);
                const double d = geometry::distance(real.mbs_points[i], v);
                const double e = effective_distance(d, chi, cfg.alpha_m);
                if (!best_m || e < best_m->effective) best_m = Candidate{i, d, e, chi, real.mbs_points[i]};
            }
            std::optional<Candidate> best_s;
            const auto& offs = real.sbs_offsets[r];
            for (std::size_t i = 0; i < offs.size(); ++i) {
                const double chi = channel::sample_shadowing(cfg.shadow_std_s0_db, rng);
                const double d = std::abs(offs[i] - voff);
                const double e = effective_distance(d, chi, cfg.alpha_s);
                if (!best_s || e < best_s->effective)
                    best_s = Candidate{i, d, e, chi, geometry::to_plane(real.roads[r], offs[i])};
            }
            if (!best_m && !best_s) continue;
            ++counts[static_cast<std::size_t>(associate(best_m, best_s, cfg).association)];
        }
    }
    return counts;
}

struct EstimateWithCI {
    double mean = std::numeric_limits<double>::quiet_NaN();
    double ci95 = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t n = 0;
};

/// Running sums in a fixed order, so results are bit-reproducible.
struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;

    void add(double v)
    {
        sum += v;
        sum_sq += v * v;
        ++n;
    }

    EstimateWithCI estimate() const
    {
        EstimateWithCI e;
        e.n = n;
        if (n == 0) return e;
        e.mean = sum / static_cast<double>(n);
        if (n < 2) {
            e.ci95 = std::numeric_limits<double>::infinity();
            return e;
        }
        const double var = std::max(0.0, (sum_sq - sum * e.mean) / static_cast<double>(n - 1));
        e.ci95 = 1.96 * std::sqrt(var / static_cast<double>(n));
        return e;
    }
};

inline constexpr std::size_t kCaseSlots = 6;

inline std::size_t slot(AssociationCase c) { return static_cast<std::size_t>(c); }
inline std::size_t slot(Direction d) { return d == Direction::UL ? 0 : 1; }
inline std::size_t slot(ServingKind s) { return s == ServingKind::MBS ? 0 : 1; }

struct MonteCarloResult {
    std::uint64_t drops = 0;
    std::uint64_t seed = 0;
    /// Case frequencies (typical vehicle, or every vehicle for AllVehicles).
    std::array<EstimateWithCI, 4> association{};
    /// Mean ln(1 + SIR) conditioned on the case, indexed [case][direction];
    /// CoupledM/CoupledS use the coupled UL SIR.
    std::array<std::array<EstimateWithCI, 2>, kCaseSlots> se{};
    /// Fraction of the case's drops whose SIR was infinite (excluded from se).
    std::array<std::array<double, 2>, kCaseSlots> infinite_rate{};
    /// Joint coverage P(served by kind, SIR > t), indexed [threshold][serving][direction].
    std::vector<std::array<std::array<EstimateWithCI, 2>, 2>> coverage;
    /// Per-drop ln(1 + SIR) means: [direction] for decoupled and coupled access.
    std::array<EstimateWithCI, 2> system_se_decoupled{};
    std::array<EstimateWithCI, 2> system_se_coupled{};
    /// Per-drop ln(1 + SIR_UL) + ln(1 + SIR_DL).
    EstimateWithCI system_total_decoupled;
    EstimateWithCI system_total_coupled;
    /// Per-drop 1{case} (ln(1 + SIR_UL) + ln(1 + SIR_DL)), for Cases 1..4.
    std::array<EstimateWithCI, 4> case_weighted_se{};
    std::vector<DropRecord> samples;
};

inline MonteCarloResult run_monte_carlo(const NetworkConfig& cfg, std::uint64_t drops, std::uint64_t seed,
                                        const SimOptions& opts = {})
{
    validate(cfg);
    if (drops < 1) throw ValidationError("drops must be >= 1");
    for (double t : opts.thresholds)
        if (!(t > 0.0)) throw ValidationError("coverage thresholds must be > 0");

    MonteCarloResult res;
    res.drops = drops;
    res.seed = seed;
    const std::size_t nt = opts.thresholds.size();
    res.coverage.resize(nt);

    if (opts.estimator == Estimator::AllVehicles) {
        std::array<std::uint64_t, 4> counts{};
        for (std::uint64_t d = 0; d < drops; ++d) {
            const auto c = all_vehicle_case_counts(cfg, seed, d, opts);
            for (std::size_t i = 0; i < 4; ++i) counts[i] += c[i];
        }
        std::uint64_t total = 0;
        for (auto c : counts) total += c;
        for (std::size_t i = 0; i < 4; ++i) {
            Accumulator a;
            a.n = total;
            a.sum = a.sum_sq = static_cast<double>(counts[i]);
            res.association[i] = a.estimate();
        }
        return res;
    }

    std::array<Accumulator, 4> assoc;
    std::array<std::array<Accumulator, 2>, kCaseSlots> se;
    std::array<std::array<std::uint64_t, 2>, kCaseSlots> se_total{};
    std::array<std::array<std::uint64_t, 2>, kCaseSlots> se_inf{};
    std::vector<std::array<std::array<Accumulator, 2>, 2>> cov(nt);
    std::array<Accumulator, 2> sys_dec, sys_cpl;
    Accumulator tot_dec, tot_cpl;
    std::array<Accumulator, 4> weighted;

    auto add_se = [&](AssociationCase c, Direction d, double sir) {
        const auto ci = slot(c), di = slot(d);
        ++se_total[ci][di];
        if (std::isinf(sir)) {
            ++se_inf[ci][di];
            return;
        }
        se[ci][di].add(std::log1p(sir));
    };

    for (std::uint64_t d = 0; d < drops; ++d) {
        const DropRecord rec = simulate_drop(cfg, seed, d, opts);
        for (std::size_t i = 0; i < 4; ++i) assoc[i].add(slot(rec.association) == i ? 1.0 : 0.0);
        if (opts.keep_samples) res.samples.push_back(rec);
        if (opts.association_only) continue;

        add_se(rec.association, Direction::UL, rec.sir_ul);
        add_se(rec.association, Direction::DL, rec.sir_dl);
        const AssociationCase coupled =
            rec.dl == ServingKind::MBS ? AssociationCase::CoupledM : AssociationCase::CoupledS;
        add_se(coupled, Direction::UL, rec.sir_ul_coupled);
        add_se(coupled, Direction::DL, rec.sir_dl);

        for (std::size_t t = 0; t < nt; ++t) {
            const double th = opts.thresholds[t];
            for (auto kind : {ServingKind::MBS, ServingKind::SBS}) {
                cov[t][slot(kind)][0].add(rec.ul == kind && rec.sir_ul > th ? 1.0 : 0.0);
                cov[t][slot(kind)][1].add(rec.dl == kind && rec.sir_dl > th ? 1.0 : 0.0);
            }
        }
        if (!std::isinf(rec.sir_ul)) sys_dec[0].add(std::log1p(rec.sir_ul));
        if (!std::isinf(rec.sir_dl)) {
            sys_dec[1].add(std::log1p(rec.sir_dl));
            sys_cpl[1].add(std::log1p(rec.sir_dl));
        }
        if (!std::isinf(rec.sir_ul_coupled)) sys_cpl[0].add(std::log1p(rec.sir_ul_coupled));
        if (!std::isinf(rec.sir_ul) && !std::isinf(rec.sir_dl)) {
            const double both = std::log1p(rec.sir_ul) + std::log1p(rec.sir_dl);
            tot_dec.add(both);
            for (std::size_t i = 0; i < 4; ++i) weighted[i].add(slot(rec.association) == i ? both : 0.0);
        }
        if (!std::isinf(rec.sir_ul_coupled) && !std::isinf(rec.sir_dl))
            tot_cpl.add(std::log1p(rec.sir_ul_coupled) + std::log1p(rec.sir_dl));
    }

    for (std::size_t i = 0; i < 4; ++i) res.association[i] = assoc[i].estimate();
    for (std::size_t c = 0; c < kCaseSlots; ++c)
        for (std::size_t di = 0; di < 2; ++di) {
            res.se[c][di] = se[c][di].estimate();
            res.infinite_rate[c][di] =
                se_total[c][di] == 0 ? 0.0 : static_cast<double>(se_inf[c][di]) / static_cast<double>(se_total[c][di]);
        }
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t di = 0; di < 2; ++di) res.coverage[t][k][di] = cov[t][k][di].estimate();
    for (std::size_t di = 0; di < 2; ++di) {
        res.system_se_decoupled[di] = sys_dec[di].estimate();
        res.system_se_coupled[di] = sys_cpl[di].estimate();
    }
    res.system_total_decoupled = tot_dec.estimate();
    res.system_total_coupled = tot_cpl.estimate();
    for (std::size_t i = 0; i < 4; ++i) res.case_weighted_se[i] = weighted[i].estimate();
    return res;
}

struct SpeedPoint {
    double speed_kmh = 0.0;
    double lambda_v = 0.0;
    MonteCarloResult result;
};

/// Greenshields sweep: each speed sets the vehicle density and reruns the
/// same drops (same seed). Unless the caller chose otherwise, vehicles are
/// thinned from the jam density so all speeds share BSs and vehicles.
inline std::vector<SpeedPoint> run_speed_sweep(const NetworkConfig& cfg, const std::vector<double>& speeds,
                                               std::uint64_t drops, std::uint64_t seed, SimOptions opts = {})
{
    if (opts.thinning_lambda_v == 0.0) opts.thinning_lambda_v = cfg.lambda_max_per_km;
    std::vector<SpeedPoint> out;
    out.reserve(speeds.size());
    for (double v : speeds) {
        NetworkConfig c = cfg;
        c.lambda_v = channel::speed_to_density(v, cfg);
        out.push_back({v, c.lambda_v, run_monte_carlo(c, drops, seed, opts)});
    }
    return out;
}

/// Rows `drop_id,case,direction,sir_linear`; infinite SIR is written as inf.
inline void export_samples(std::ostream& os, const std::vector<DropRecord>& samples)
{
    os << "drop_id,case,direction,sir_linear\n";
    for (const auto& r : samples) {
        os << r.drop_id << ',' << analysis::to_string(r.association) << ",UL," << r.sir_ul << '\n';
        os << r.drop_id << ',' << analysis::to_string(r.association) << ",DL," << r.sir_dl << '\n';
    }
}

}  // namespace cv2x::sim
