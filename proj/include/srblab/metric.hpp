#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "srblab/measure.hpp"

namespace srblab {

// Truncated series metric dist(mu, nu) = sum_{i=1..I} 2^-i |I_i(mu) - I_i(nu)|
// with I_i the integral of the i-th family member. Values lie in
// [0, 1 - 2^-I]; the tail truncation error is bounded by 2^-I.
//
// The class precomputes the table of family values at all cell centers, so a
// measure reduces to its I-vector of integrals (its "signature") via the
// accumulate kernel, and distances reduce to a weighted L1 between
// signatures. Signature and distance values are bit-identical to the direct
// integrate()-based evaluation.
class WeakStarMetric {
public:
    WeakStarMetric(std::shared_ptr<const GridPartition> partition,
                   std::shared_ptr<const TestFunctionFamily> family, std::size_t truncation);

    std::size_t truncation() const { return truncation_; }
    const GridPartition& partition() const { return *partition_; }
    const std::shared_ptr<const GridPartition>& partition_ptr() const { return partition_; }
    const TestFunctionFamily& family() const { return *family_; }

    std::vector<double> signature(const DiscreteMeasure& mu) const;
    double distance(const std::vector<double>& sig_a, const std::vector<double>& sig_b) const;
    double distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu) const;

    // Signature of (1-lambda) a + lambda b; integrals are linear in the measure.
    std::vector<double> mix(const std::vector<double>& sig_a, const std::vector<double>& sig_b,
                            double lambda) const;

private:
    std::shared_ptr<const GridPartition> partition_;
    std::shared_ptr<const TestFunctionFamily> family_;
    std::size_t truncation_;
    std::vector<double> table_;    // [cell * truncation + (i-1)] = g_i(center of cell)
    std::vector<double> weights_;  // 2^-i
};

// One-shot distance via direct integration; builds no table. Same value as
// WeakStarMetric::distance for matching family and truncation.
double weak_star_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const TestFunctionFamily& family, std::size_t truncation);

}  // namespace srblab
