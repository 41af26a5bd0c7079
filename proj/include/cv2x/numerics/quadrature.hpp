#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "cv2x/error.hpp"

namespace cv2x::numerics {

struct QuadratureSettings {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    /// Sub-intervals carrying less than tail_cutoff x |running estimate| of
    /// absolute mass are retired instead of bisected.
    double tail_cutoff = 1e-14;

    void validate() const
    {
        if (!(rel_tol > 0.0)) throw ValidationError("QuadratureSettings: rel_tol must be > 0");
        if (!(abs_tol > 0.0)) throw ValidationError("QuadratureSettings: abs_tol must be > 0");
        if (max_subdivisions < 1) throw ValidationError("QuadratureSettings: max_subdivisions must be >= 1");
    }
};

template <std::size_t N>
struct QuadratureResult {
    std::array<double, N> value{};
    std::array<double, N> error{};
    int subdivisions = 0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kronrod_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kronrod_weights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600925983560, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 5> gauss_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <std::size_t N>
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    std::array<double, N> value{};
    std::array<double, N> error{};
    std::array<double, N> mass{};
    double priority = 0.0;

    bool operator<(const Segment& other) const { return priority < other.priority; }
};

template <std::size_t N, class F>
Segment<N> gauss_kronrod21(const F& f, double lo, double hi)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();

    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double abs_half = std::abs(half);

    std::array<std::array<double, N>, 21> samples{};
    samples[10] = f(center);
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kronrod_nodes[j];
        samples[j] = f(center - dx);
        samples[20 - j] = f(center + dx);
    }

    Segment<N> seg;
    seg.lo = lo;
    seg.hi = hi;
    for (std::size_t c = 0; c < N; ++c) {
        const double fc = samples[10][c];
        double resk = kronrod_weights[10] * fc;
        double resg = 0.0;
        double resabs = std::abs(resk);
        for (std::size_t j = 0; j < 10; ++j) {
            const double f1 = samples[j][c];
            const double f2 = samples[20 - j][c];
            resk += kronrod_weights[j] * (f1 + f2);
            resabs += kronrod_weights[j] * (std::abs(f1) + std::abs(f2));
            if (j % 2 == 1) resg += gauss_weights[j / 2] * (f1 + f2);
        }
        const double reskh = 0.5 * resk;
        double resasc = kronrod_weights[10] * std::abs(fc - reskh);
        for (std::size_t j = 0; j < 10; ++j) {
            resasc += kronrod_weights[j] *
                      (std::abs(samples[j][c] - reskh) + std::abs(samples[20 - j][c] - reskh));
        }
        resabs *= abs_half;
        resasc *= abs_half;
        double err = std::abs((resk - resg) * half);
        if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
        if (resabs > uflow / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
        seg.value[c] = resk * half;
        seg.error[c] = err;
        seg.mass[c] = resabs;
    }
    return seg;
}

template <std::size_t N, class F>
QuadratureResult<N> adaptive(const F& f, double lo, double hi, const QuadratureSettings& settings)
{
    QuadratureResult<N> out;
    if (lo == hi) return out;

    Segment<N> whole = gauss_kronrod21<N>(f, lo, hi);

    std::array<double, N> scale{};
    for (std::size_t c = 0; c < N; ++c)
        scale[c] = std::max(whole.mass[c], std::numeric_limits<double>::min());

    auto prioritise = [&](Segment<N>& s) {
        double p = 0.0;
        for (std::size_t c = 0; c < N; ++c) p = std::max(p, s.error[c] / scale[c]);
        s.priority = p;
    };

    std::array<double, N> total = whole.value;
    std::array<double, N> total_err = whole.error;
    auto converged = [&] {
        for (std::size_t c = 0; c < N; ++c) {
            const double tol = std::max(settings.abs_tol, settings.rel_tol * std::abs(total[c]));
            if (!(total_err[c] <= tol)) return false;
        }
        return true;
    };

    std::priority_queue<Segment<N>> heap;
    prioritise(whole);
    heap.push(whole);

    int subdivisions = 0;
    while (!converged()) {
        if (heap.empty() || subdivisions >= settings.max_subdivisions) {
            double worst = 0.0;
            for (std::size_t c = 0; c < N; ++c) worst = std::max(worst, total_err[c]);
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "adaptive quadrature did not converge on [%g, %g] after %d subdivisions (error estimate %.3g)",
                          lo, hi, subdivisions, worst);
            throw NonConvergence(msg);
        }
        Segment<N> top = heap.top();
        heap.pop();

        const double mid = 0.5 * (top.lo + top.hi);
        const bool splittable = mid > std::min(top.lo, top.hi) && mid < std::max(top.lo, top.hi) &&
                                std::abs(top.hi - top.lo) > 1e3 * std::numeric_limits<double>::epsilon() *
                                                                 std::max(std::abs(top.lo), std::abs(top.hi));
        if (!splittable) continue;  // roundoff floor; its error stays in the total

        Segment<N> left = gauss_kronrod21<N>(f, top.lo, mid);
        Segment<N> right = gauss_kronrod21<N>(f, mid, top.hi);
        ++subdivisions;
        for (std::size_t c = 0; c < N; ++c) {
            total[c] += left.value[c] + right.value[c] - top.value[c];
            total_err[c] += left.error[c] + right.error[c] - top.error[c];
        }

        for (Segment<N>* s : {&left, &right}) {
            bool negligible = true;
            for (std::size_t c = 0; c < N; ++c)
                negligible = negligible && s->mass[c] <= settings.tail_cutoff * std::abs(total[c]);
            if (negligible) continue;
            prioritise(*s);
            heap.push(*s);
        }
    }
    out.value = total;
    for (std::size_t c = 0; c < N; ++c) out.error[c] = std::max(total_err[c], 0.0);
    out.subdivisions = subdivisions;
    return out;
}

}  // namespace detail

/// Vector-valued integral of f over [lo, hi]; hi may be +infinity.
///
/// Semi-infinite ranges use x = lo + scale * u / (1 - u), u in [0, 1), so
/// `scale` should be a characteristic length of the integrand.
template <std::size_t N, class F>
QuadratureResult<N> integrate_vec(const F& f, double lo, double hi, const QuadratureSettings& settings = {},
                                  double scale = 1.0)
{
    settings.validate();
    if (std::isnan(lo) || std::isnan(hi)) throw Error("integrate: NaN integration limit");
    if (std::isinf(lo)) throw Error("integrate: lower limit must be finite");
    if (hi < lo) {
        auto r = integrate_vec<N>(f, hi, lo, settings, scale);
        for (auto& v : r.value) v = -v;
        return r;
    }
    if (std::isinf(hi)) {
        if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;
        auto mapped = [&](double u) -> std::array<double, N> {
            const double w = 1.0 - u;
            const double x = lo + scale * u / w;
            const double jac = scale / (w * w);
            std::array<double, N> v = f(x);
            for (auto& e : v) e = (e == 0.0) ? 0.0 : e * jac;
            return v;
        };
        return detail::adaptive<N>(mapped, 0.0, 1.0, settings);
    }
    return detail::adaptive<N>(f, lo, hi, settings);
}

template <class F>
double integrate(const F& f, double lo, double hi, const QuadratureSettings& settings = {}, double scale = 1.0)
{
    auto wrapped = [&](double x) { return std::array<double, 1>{static_cast<double>(f(x))}; };
    return integrate_vec<1>(wrapped, lo, hi, settings, scale).value[0];
}

}  // namespace cv2x::numerics
