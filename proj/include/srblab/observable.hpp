#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srblab/pomega.hpp"
#include "srblab/rng.hpp"

namespace srblab {

// Lebesgue sampling plan for initial conditions.
struct SamplePlan {
    std::size_t count = 0;
    std::uint64_t seed = 0;
    DomainDescriptor domain;
};

std::vector<Point> sample_initial_conditions(const SamplePlan& plan);

struct BasinEstimate {
    double epsilon;
    double fraction;       // #{samples with min rep distance < epsilon} / N
    double ci_halfwidth;   // distribution-free two-sided 95% bound
};

struct CandidateMeasure {
    DiscreteMeasure representative;
    std::size_t support_samples = 0;  // distinct samples contributing a representative
    std::vector<BasinEstimate> basin; // one entry per ladder rung, descending epsilon
    std::vector<double> convergent_fractions;  // srb-rule fractions per rung
    double decay_ratio_avg = 0.0;     // mean ratio of successive convergent fractions
    bool srb = false;
    bool isolated = false;
};

struct ObservableSetEstimate {
    std::vector<CandidateMeasure> candidates;
    std::vector<double> epsilon_ladder;  // descending
    std::size_t sample_count = 0;
    std::size_t excluded_samples = 0;    // diverged orbits
    double delta_cluster = 0.0;
    std::vector<LimitSetEstimate> sample_estimates;  // index-aligned with the plan
};

struct ObservableParams {
    CheckpointSchedule schedule;
    PomegaParams pomega;
    std::vector<double> epsilon_ladder{0.2, 0.1, 0.05, 0.025};
    double phi_srb = 0.05;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Monte-Carlo estimate of the observable set: limit-set estimation per
// sample, pooling and clustering of representatives, epsilon-basin fractions,
// SRB classification. Candidates whose basin fraction at the largest epsilon
// falls below 2/N are dropped.
ObservableSetEstimate estimate_observable_set(const MapSystem& system, const SamplePlan& plan,
                                              const WeakStarMetric& metric,
                                              const ObservableParams& params);

// SRB flag for one candidate: true when the fraction of samples that are
// convergent AND within epsilon of the candidate stays at or above phi_srb on
// every ladder rung. Also fills convergent_fractions and decay_ratio_avg.
void classify_srb(CandidateMeasure& candidate,
                  const std::vector<LimitSetEstimate>& sample_estimates,
                  const std::vector<double>& epsilon_ladder, double phi_srb, std::size_t n_samples,
                  const WeakStarMetric& metric);

// Fraction of fresh holdout samples whose every representative lies within
// epsilon of some candidate. Diverged holdout orbits are excluded from the
// denominator; an empty candidate list gives coverage 0.
double minimality_check(const ObservableSetEstimate& estimate, const MapSystem& system,
                        const SamplePlan& holdout, const WeakStarMetric& metric,
                        const ObservableParams& params, double epsilon);

struct CardinalityReport {
    std::string cls;  // "single", "finite" or "continuum-like"
    std::vector<std::size_t> sample_counts;
    std::vector<std::size_t> candidate_counts;
    bool finite_all_srb = true;    // finite class => every candidate srb (Theorem 1.6 direction)
    bool isolated_all_srb = true;  // isolated candidates carry srb (Lemma 4.1 surrogate)
};

// Classifies the estimated observable set over a sweep of >= 3 strictly
// increasing sample counts: stable candidate counts mean single/finite,
// growing counts mean continuum-like.
CardinalityReport cardinality_report(const std::vector<ObservableSetEstimate>& sweep);

}  // namespace srblab
