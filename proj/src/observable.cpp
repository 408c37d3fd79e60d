#include "srblab/observable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "srblab/clustering.hpp"
#include "srblab/errors.hpp"
#include "srblab/parallel.hpp"

namespace srblab {
namespace {

constexpr double kConfidenceLevel = 0.05;  // two-sided 95%

double ci_halfwidth(std::size_t n) {
    return std::sqrt(std::log(2.0 / kConfidenceLevel) / (2.0 * static_cast<double>(n)));
}

void validate_ladder(const std::vector<double>& ladder) {
    if (ladder.empty()) throw ArgumentError("epsilon ladder must be nonempty");
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (!(ladder[i] > 0.0)) throw ArgumentError("epsilon ladder entries must be > 0");
        if (i > 0 && !(ladder[i] < ladder[i - 1]))
            throw ArgumentError("epsilon ladder must be strictly decreasing");
    }
}

// Runs limit-set estimation for every start, batched by the system's lane
// width, results in sample order regardless of thread scheduling.
std::vector<LimitSetEstimate> run_samples(const MapSystem& system, const std::vector<Point>& x0s,
                                          const WeakStarMetric& metric,
                                          const ObservableParams& params) {
    const std::size_t n = x0s.size();
    std::vector<LimitSetEstimate> out(n);
    const std::size_t width = std::max<std::size_t>(1, system.batch_width());
    const std::size_t groups = (n + width - 1) / width;
    parallel_for_index(groups, params.threads, [&](std::size_t g) {
        const std::size_t lo = g * width;
        const std::size_t hi = std::min(n, lo + width);
        const std::vector<Point> chunk(x0s.begin() + lo, x0s.begin() + hi);
        auto results = estimate_pomega_batch(system, chunk, params.schedule, metric,
                                             params.pomega);
        for (std::size_t i = 0; i < results.size(); ++i)
            out[lo + i] = std::move(results[i].estimate);
    });
    return out;
}

}  // namespace

std::vector<Point> sample_initial_conditions(const SamplePlan& plan) {
    if (plan.count == 0) throw ArgumentError("sample count must be >= 1");
    return lebesgue_points(plan.domain, plan.seed, plan.count);
}

void classify_srb(CandidateMeasure& candidate,
                  const std::vector<LimitSetEstimate>& sample_estimates,
                  const std::vector<double>& epsilon_ladder, double phi_srb, std::size_t n_samples,
                  const WeakStarMetric& metric) {
    validate_ladder(epsilon_ladder);
    const auto sig_c = metric.signature(candidate.representative);
    std::vector<double> conv_dist;  // min representative distance of convergent samples
    for (const auto& est : sample_estimates) {
        if (est.diverged_at || !est.convergent) continue;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& rep : est.representatives)
            best = std::min(best, metric.distance(metric.signature(rep), sig_c));
        conv_dist.push_back(best);
    }
    candidate.convergent_fractions.clear();
    for (double eps : epsilon_ladder) {
        std::size_t hits = 0;
        for (double d : conv_dist) hits += d < eps;
        candidate.convergent_fractions.push_back(static_cast<double>(hits) /
                                                 static_cast<double>(n_samples));
    }
    bool srb = true;
    for (double f : candidate.convergent_fractions) srb = srb && f >= phi_srb;
    candidate.srb = srb;

    double ratio_sum = 0.0;
    std::size_t ratio_count = 0;
    for (std::size_t j = 0; j + 1 < candidate.convergent_fractions.size(); ++j) {
        const double coarse = candidate.convergent_fractions[j];
        if (coarse > 0.0) {
            ratio_sum += candidate.convergent_fractions[j + 1] / coarse;
            ++ratio_count;
        }
    }
    candidate.decay_ratio_avg = ratio_count ? ratio_sum / static_cast<double>(ratio_count) : 0.0;
}

ObservableSetEstimate estimate_observable_set(const MapSystem& system, const SamplePlan& plan,
                                              const WeakStarMetric& metric,
                                              const ObservableParams& params) {
    validate_ladder(params.epsilon_ladder);
    if (!(params.phi_srb > 0.0)) throw ArgumentError("phi_srb must be > 0");
    if (!(plan.domain == system.domain()))
        throw IncompatibilityError("sample plan domain differs from system domain");

    const auto x0s = sample_initial_conditions(plan);
    ObservableSetEstimate est;
    est.epsilon_ladder = params.epsilon_ladder;
    est.sample_count = plan.count;
    est.delta_cluster = params.pomega.delta_cluster;
    est.sample_estimates = run_samples(system, x0s, metric, params);

    // Pool representatives across samples, keeping sample provenance.
    struct PooledRep {
        std::size_t sample;
        const DiscreteMeasure* measure;
        std::vector<double> signature;
    };
    std::vector<PooledRep> pool;
    for (std::size_t s = 0; s < est.sample_estimates.size(); ++s) {
        const auto& le = est.sample_estimates[s];
        if (le.diverged_at) {
            ++est.excluded_samples;
            continue;
        }
        for (const auto& rep : le.representatives)
            pool.push_back({s, &rep, metric.signature(rep)});
    }
    if (pool.empty()) return est;

    DistanceMatrix dm(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            dm.set(i, j, metric.distance(pool[i].signature, pool[j].signature));
    const auto labels = single_linkage(dm, params.pomega.delta_cluster);
    const std::size_t k = cluster_count(labels);

    const double halfwidth = ci_halfwidth(plan.count);
    const double retention = 2.0 / static_cast<double>(plan.count);
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<DiscreteMeasure> members;
        std::vector<double> lambdas;
        std::set<std::size_t> samples;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (labels[i] == c) {
                members.push_back(*pool[i].measure);
                samples.insert(pool[i].sample);
            }
        }
        lambdas.assign(members.size(), 1.0 / static_cast<double>(members.size()));
        CandidateMeasure cand{convex_combination(members, lambdas), 0, {}, {}, 0.0, false, false};
        cand.support_samples = samples.size();

        // Epsilon-basin fractions: per sample, the smallest representative
        // distance to this candidate.
        const auto sig_c = metric.signature(cand.representative);
        std::vector<double> min_dist;
        min_dist.reserve(est.sample_estimates.size());
        for (const auto& le : est.sample_estimates) {
            if (le.diverged_at) continue;
            double best = std::numeric_limits<double>::infinity();
            for (const auto& rep : le.representatives)
                best = std::min(best, metric.distance(metric.signature(rep), sig_c));
            min_dist.push_back(best);
        }
        for (double eps : params.epsilon_ladder) {
            std::size_t hits = 0;
            for (double d : min_dist) hits += d < eps;
            cand.basin.push_back({eps,
                                  static_cast<double>(hits) / static_cast<double>(plan.count),
                                  halfwidth});
        }
        if (cand.basin.front().fraction >= retention) {
            classify_srb(cand, est.sample_estimates, params.epsilon_ladder, params.phi_srb,
                         plan.count, metric);
            est.candidates.push_back(std::move(cand));
        }
    }

    // Isolation: nearest retained neighbor farther than twice the clustering
    // threshold (a lone candidate counts as isolated).
    std::vector<std::vector<double>> cand_sigs;
    cand_sigs.reserve(est.candidates.size());
    for (const auto& c : est.candidates) cand_sigs.push_back(metric.signature(c.representative));
    for (std::size_t i = 0; i < est.candidates.size(); ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < est.candidates.size(); ++j) {
            if (i != j) nearest = std::min(nearest, metric.distance(cand_sigs[i], cand_sigs[j]));
        }
        est.candidates[i].isolated = nearest > 2.0 * params.pomega.delta_cluster;
    }
    return est;
}

double minimality_check(const ObservableSetEstimate& estimate, const MapSystem& system,
                        const SamplePlan& holdout, const WeakStarMetric& metric,
                        const ObservableParams& params, double epsilon) {
    if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be > 0");
    const auto x0s = sample_initial_conditions(holdout);
    const auto ests = run_samples(system, x0s, metric, params);

    std::vector<std::vector<double>> cand_sigs;
    cand_sigs.reserve(estimate.candidates.size());
    for (const auto& c : estimate.candidates)
        cand_sigs.push_back(metric.signature(c.representative));

    std::size_t covered = 0, valid = 0;
    for (const auto& le : ests) {
        if (le.diverged_at) continue;
        ++valid;
        bool all_reps_covered = true;
        for (const auto& rep : le.representatives) {
            const auto sig = metric.signature(rep);
            bool near_some = false;
            for (const auto& cs : cand_sigs) {
                if (metric.distance(sig, cs) < epsilon) {
                    near_some = true;
                    break;
                }
            }
            if (!near_some) {
                all_reps_covered = false;
                break;
            }
        }
        covered += all_reps_covered;
    }
    return valid ? static_cast<double>(covered) / static_cast<double>(valid) : 0.0;
}

CardinalityReport cardinality_report(const std::vector<ObservableSetEstimate>& sweep) {
    if (sweep.size() < 3)
        throw ArgumentError("cardinality report needs at least 3 sample counts");
    CardinalityReport rep;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        if (i > 0) {
            if (sweep[i].sample_count <= sweep[i - 1].sample_count)
                throw ArgumentError("sweep sample counts must be strictly increasing");
            if (sweep[i].epsilon_ladder != sweep[i - 1].epsilon_ladder ||
                sweep[i].delta_cluster != sweep[i - 1].delta_cluster)
                throw ArgumentError("sweep must use one configuration");
        }
        rep.sample_counts.push_back(sweep[i].sample_count);
        rep.candidate_counts.push_back(sweep[i].candidates.size());
    }
    const std::size_t k = rep.candidate_counts.size();
    const bool stable = rep.candidate_counts[k - 1] == rep.candidate_counts[k - 2];
    if (stable) {
        rep.cls = rep.candidate_counts[k - 1] == 1 ? "single" : "finite";
    } else {
        rep.cls = "continuum-like";
    }
    for (const auto& cand : sweep.back().candidates) {
        if (stable && !cand.srb) rep.finite_all_srb = false;
        if (cand.isolated && !cand.srb) rep.isolated_all_srb = false;
    }
    return rep;
}

}  // namespace srblab
