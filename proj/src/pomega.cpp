#include "srblab/pomega.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "srblab/clustering.hpp"
#include "srblab/errors.hpp"

namespace srblab {
namespace {

DiscreteMeasure centroid(const std::vector<EmpiricSnapshot>& snaps,
                         const std::vector<std::size_t>& members) {
    std::vector<DiscreteMeasure> ms;
    std::vector<double> lambdas;
    ms.reserve(members.size());
    const double w = 1.0 / static_cast<double>(members.size());
    for (std::size_t idx : members) {
        ms.push_back(snaps[idx].measure);
        lambdas.push_back(w);
    }
    return convex_combination(ms, lambdas);
}

}  // namespace

LimitSetEstimate estimate_pomega_from_snapshots(const std::vector<EmpiricSnapshot>& snapshots,
                                                const WeakStarMetric& metric,
                                                const PomegaParams& params) {
    if (!(params.tail_fraction > 0.0 && params.tail_fraction <= 1.0))
        throw ArgumentError("tail_fraction must be in (0, 1]");
    if (!(params.delta_cluster > 0.0)) throw ArgumentError("delta_cluster must be > 0");
    if (!(params.delta_conv > 0.0)) throw ArgumentError("delta_conv must be > 0");

    const std::size_t total = snapshots.size();
    const std::size_t tail =
        static_cast<std::size_t>(std::ceil(params.tail_fraction * static_cast<double>(total)));
    if (tail < 2)
        throw ArgumentError("need at least 2 tail checkpoints, got " + std::to_string(tail));
    const std::size_t start = total - tail;

    std::vector<std::vector<double>> sigs(tail);
    for (std::size_t i = 0; i < tail; ++i)
        sigs[i] = metric.signature(snapshots[start + i].measure);

    DistanceMatrix dm(tail);
    double diameter = 0.0;
    for (std::size_t i = 0; i < tail; ++i) {
        for (std::size_t j = i + 1; j < tail; ++j) {
            const double d = metric.distance(sigs[i], sigs[j]);
            dm.set(i, j, d);
            diameter = std::max(diameter, d);
        }
    }

    LimitSetEstimate est;
    est.diameter = diameter;
    est.convergent = diameter <= params.delta_conv;
    est.window_min = snapshots[start].n;
    est.window_max = snapshots[total - 1].n;

    std::vector<std::vector<std::size_t>> groups;
    if (est.convergent) {
        groups.emplace_back(tail);
        for (std::size_t i = 0; i < tail; ++i) groups[0][i] = start + i;
    } else {
        const auto labels = single_linkage(dm, params.delta_cluster);
        groups.resize(cluster_count(labels));
        for (std::size_t i = 0; i < tail; ++i) groups[labels[i]].push_back(start + i);
    }
    for (const auto& g : groups) {
        est.representatives.push_back(centroid(snapshots, g));
        est.populations.push_back(g.size());
    }
    return est;
}

PomegaResult estimate_pomega(const MapSystem& system, const Point& x0,
                             const CheckpointSchedule& schedule, const WeakStarMetric& metric,
                             const PomegaParams& params) {
    auto batch = estimate_pomega_batch(system, {x0}, schedule, metric, params);
    return std::move(batch[0]);
}

std::vector<PomegaResult> estimate_pomega_batch(const MapSystem& system,
                                                const std::vector<Point>& x0s,
                                                const CheckpointSchedule& schedule,
                                                const WeakStarMetric& metric,
                                                const PomegaParams& params) {
    auto runs = empiric_sequence_batch(system, x0s, schedule, metric.partition_ptr(),
                                       params.burn_in);
    std::vector<PomegaResult> out;
    out.reserve(runs.size());
    for (auto& run : runs) {
        PomegaResult r;
        if (run.diverged_at) {
            r.estimate.diverged_at = run.diverged_at;
        } else {
            r.estimate = estimate_pomega_from_snapshots(run.snapshots, metric, params);
        }
        r.snapshots = std::move(run.snapshots);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SegmentProjection> segment_projection_residual(const LimitSetEstimate& estimate,
                                                           const DiscreteMeasure& mu_a,
                                                           const DiscreteMeasure& mu_b,
                                                           const WeakStarMetric& metric) {
    const auto sig_a = metric.signature(mu_a);
    const auto sig_b = metric.signature(mu_b);
    std::vector<SegmentProjection> out;
    out.reserve(estimate.representatives.size());
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (const auto& rep : estimate.representatives) {
        const auto sig_r = metric.signature(rep);
        auto f = [&](double lam) { return metric.distance(sig_r, metric.mix(sig_a, sig_b, lam)); };
        double lo = 0.0, hi = 1.0;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        while (hi - lo > 1e-4) {
            if (f1 <= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = f(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = f(x2);
            }
        }
        // endpoints can win when the minimum sits on the boundary
        double best_l = 0.5 * (lo + hi), best_f = f(best_l);
        for (double cand : {0.0, 1.0}) {
            const double fc = f(cand);
            if (fc < best_f) {
                best_f = fc;
                best_l = cand;
            }
        }
        out.push_back({best_l, best_f});
    }
    return out;
}

ConvexlikeResult convexlike_search(const std::vector<EmpiricSnapshot>& snapshots,
                                   const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                   double lambda, double eps, std::uint64_t min_n,
                                   const WeakStarMetric& metric) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw ArgumentError("lambda must be in [0, 1]");
    if (!(eps > 0.0)) throw ArgumentError("eps must be > 0");
    const auto sig_mu = metric.signature(mu);
    const auto sig_nu = metric.signature(nu);
    ConvexlikeResult res;
    res.target = lambda * metric.distance(sig_nu, sig_mu);
    res.closest_miss = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        if (snapshots[i].n <= min_n) continue;
        const double d = metric.distance(metric.signature(snapshots[i].measure), sig_mu);
        const double miss = std::fabs(d - res.target);
        if (miss <= eps) {
            res.found = true;
            res.h = snapshots[i].n;
            res.index = i;
            res.achieved = d;
            return res;
        }
        if (miss < res.closest_miss) {
            res.closest_miss = miss;
            res.h = snapshots[i].n;
            res.index = i;
            res.achieved = d;
        }
    }
    return res;
}

}  // namespace srblab
