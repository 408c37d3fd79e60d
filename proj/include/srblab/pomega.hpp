#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srblab/empiric.hpp"
#include "srblab/metric.hpp"

namespace srblab {

// Knobs for limit-set estimation from one orbit.
struct PomegaParams {
    double tail_fraction = 0.5;   // fraction of trailing checkpoints examined
    double delta_cluster = 0.05;  // single-linkage threshold among tail checkpoints
    double delta_conv = 0.02;     // tail diameter below which the sequence counts as convergent
    std::uint64_t burn_in = 0;
};

// Estimated limit set of one orbit's empiric sequence: cluster centroids of
// the tail checkpoints. convergent == true forces a single representative.
struct LimitSetEstimate {
    std::vector<DiscreteMeasure> representatives;
    std::vector<std::size_t> populations;
    bool convergent = false;
    double diameter = 0.0;                 // max pairwise distance among tail checkpoints
    std::uint64_t window_min = 0;          // smallest tail checkpoint n
    std::uint64_t window_max = 0;          // largest tail checkpoint n
    std::optional<std::uint64_t> diverged_at;
};

struct PomegaResult {
    LimitSetEstimate estimate;
    std::vector<EmpiricSnapshot> snapshots;  // full checkpoint sequence (pre-tail included)
};

// Clusters the tail of an already-computed snapshot sequence.
LimitSetEstimate estimate_pomega_from_snapshots(const std::vector<EmpiricSnapshot>& snapshots,
                                                const WeakStarMetric& metric,
                                                const PomegaParams& params);

// Full pipeline: orbit pass, checkpoints, tail clustering.
PomegaResult estimate_pomega(const MapSystem& system, const Point& x0,
                             const CheckpointSchedule& schedule, const WeakStarMetric& metric,
                             const PomegaParams& params);

// Batched variant (lockstep orbits; identical results to one-at-a-time calls).
std::vector<PomegaResult> estimate_pomega_batch(const MapSystem& system,
                                                const std::vector<Point>& x0s,
                                                const CheckpointSchedule& schedule,
                                                const WeakStarMetric& metric,
                                                const PomegaParams& params);

// Best segment coordinate for each representative: lambda* minimizing
// dist(rep, (1-lambda) mu_a + lambda mu_b) over [0,1] by golden-section
// search (the objective is convex by segment linearity of the metric), plus
// the minimized distance.
struct SegmentProjection {
    double lambda;
    double residual;
};
std::vector<SegmentProjection> segment_projection_residual(const LimitSetEstimate& estimate,
                                                           const DiscreteMeasure& mu_a,
                                                           const DiscreteMeasure& mu_b,
                                                           const WeakStarMetric& metric);

// Witness search for the convex-like interpolation property: the first
// checkpoint with n > min_n whose snapshot mu_h satisfies
// |dist(mu_h, mu) - lambda dist(nu, mu)| <= eps.
struct ConvexlikeResult {
    bool found = false;
    std::uint64_t h = 0;          // checkpoint n of the witness
    std::size_t index = 0;        // position in the snapshot list
    double achieved = 0.0;        // dist(mu_h, mu)
    double target = 0.0;          // lambda * dist(nu, mu)
    double closest_miss = 0.0;    // smallest |achieved - target| seen when not found
};
ConvexlikeResult convexlike_search(const std::vector<EmpiricSnapshot>& snapshots,
                                   const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                   double lambda, double eps, std::uint64_t min_n,
                                   const WeakStarMetric& metric);

}  // namespace srblab
