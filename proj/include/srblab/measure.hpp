#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "srblab/domain.hpp"
#include "srblab/test_functions.hpp"

namespace srblab {

inline constexpr double kWeightTolerance = 1e-9;

// Probability measure supported on grid cells: sorted sparse (cell, weight)
// list with nonnegative weights summing to 1 within kWeightTolerance.
class DiscreteMeasure {
public:
    using Entry = std::pair<std::uint64_t, double>;

    DiscreteMeasure(std::shared_ptr<const GridPartition> partition, std::vector<Entry> cells);

    const GridPartition& partition() const { return *partition_; }
    const std::shared_ptr<const GridPartition>& partition_ptr() const { return partition_; }
    const std::vector<Entry>& cells() const { return cells_; }
    std::size_t support_size() const { return cells_.size(); }
    double weight_sum() const;

    bool same_partition(const DiscreteMeasure& o) const { return *partition_ == *o.partition_; }

private:
    std::shared_ptr<const GridPartition> partition_;
    std::vector<Entry> cells_;  // sorted by cell index, no duplicates, weights >= 0
};

// Dirac delta on the cell containing p. Throws DomainError when p lies
// outside a non-periodic axis range.
DiscreteMeasure dirac(const Point& p, std::shared_ptr<const GridPartition> partition);

// Equal weight on every cell.
DiscreteMeasure uniform_measure(std::shared_ptr<const GridPartition> partition);

// Sum of lambdas[i] * measures[i]. Lambdas must be nonnegative and sum to 1
// within kWeightTolerance; all measures must share one partition.
DiscreteMeasure convex_combination(const std::vector<DiscreteMeasure>& measures,
                                   const std::vector<double>& lambdas);

// Projection onto a strictly increasing subset of axes; weights of cells that
// collapse together are summed.
DiscreteMeasure marginal(const DiscreteMeasure& mu, const std::vector<int>& axes);

// Integral of the index-th family member against mu, evaluated at cell
// centers. Value lies in [0, 1].
double integrate(std::size_t index, const DiscreteMeasure& mu, const TestFunctionFamily& family);

}  // namespace srblab
