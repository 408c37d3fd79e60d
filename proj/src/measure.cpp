#include "srblab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "srblab/errors.hpp"

namespace srblab {

DiscreteMeasure::DiscreteMeasure(std::shared_ptr<const GridPartition> partition,
                                 std::vector<Entry> cells)
    : partition_(std::move(partition)), cells_(std::move(cells)) {
    if (!partition_) throw ArgumentError("measure needs a partition");
    std::sort(cells_.begin(), cells_.end());
    const std::uint64_t count = partition_->cell_count();
    double sum = 0.0;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i].first >= count)
            throw ArgumentError("cell index " + std::to_string(cells_[i].first) +
                                " outside partition");
        if (i > 0 && cells_[i].first == cells_[i - 1].first)
            throw ArgumentError("duplicate cell index " + std::to_string(cells_[i].first));
        if (!(cells_[i].second >= 0.0))
            throw ArgumentError("negative weight on cell " + std::to_string(cells_[i].first));
        sum += cells_[i].second;
    }
    if (std::fabs(sum - 1.0) > kWeightTolerance)
        throw ArgumentError("weights sum to " + std::to_string(sum) + ", expected 1");
}

double DiscreteMeasure::weight_sum() const {
    double s = 0.0;
    for (const auto& [c, w] : cells_) s += w;
    return s;
}

DiscreteMeasure dirac(const Point& p, std::shared_ptr<const GridPartition> partition) {
    const std::uint64_t cell = partition->cell_of(p);
    return DiscreteMeasure(std::move(partition), {{cell, 1.0}});
}

DiscreteMeasure uniform_measure(std::shared_ptr<const GridPartition> partition) {
    const std::uint64_t count = partition->cell_count();
    const double w = 1.0 / static_cast<double>(count);
    std::vector<DiscreteMeasure::Entry> cells;
    cells.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c) cells.emplace_back(c, w);
    return DiscreteMeasure(std::move(partition), std::move(cells));
}

DiscreteMeasure convex_combination(const std::vector<DiscreteMeasure>& measures,
                                   const std::vector<double>& lambdas) {
    if (measures.empty()) throw ArgumentError("convex combination of zero measures");
    if (measures.size() != lambdas.size())
        throw ArgumentError("need one lambda per measure: got " + std::to_string(lambdas.size()) +
                            " lambdas for " + std::to_string(measures.size()) + " measures");
    double sum = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0)) throw ArgumentError("lambdas must be nonnegative");
        sum += l;
    }
    if (std::fabs(sum - 1.0) > kWeightTolerance)
        throw ArgumentError("lambdas sum to " + std::to_string(sum) + ", expected 1");
    for (std::size_t i = 1; i < measures.size(); ++i) {
        if (!measures[0].same_partition(measures[i]))
            throw IncompatibilityError("convex combination across different partitions");
    }

    std::map<std::uint64_t, double> acc;
    for (std::size_t i = 0; i < measures.size(); ++i) {
        if (lambdas[i] == 0.0) continue;
        for (const auto& [c, w] : measures[i].cells()) acc[c] += lambdas[i] * w;
    }
    std::vector<DiscreteMeasure::Entry> cells(acc.begin(), acc.end());
    return DiscreteMeasure(measures[0].partition_ptr(), std::move(cells));
}

DiscreteMeasure marginal(const DiscreteMeasure& mu, const std::vector<int>& axes) {
    const GridPartition& part = mu.partition();
    auto sub = std::make_shared<const GridPartition>(part.project(axes));
    std::map<std::uint64_t, double> acc;
    for (const auto& [c, w] : mu.cells()) {
        const auto ids = part.decompose(c);
        std::uint64_t idx = 0;
        for (int axis : axes) idx = idx * part.resolution[axis] + ids[axis];
        acc[idx] += w;
    }
    std::vector<DiscreteMeasure::Entry> cells(acc.begin(), acc.end());
    return DiscreteMeasure(std::move(sub), std::move(cells));
}

double integrate(std::size_t index, const DiscreteMeasure& mu, const TestFunctionFamily& family) {
    if (!(family.domain() == mu.partition().domain))
        throw IncompatibilityError("family and measure domains differ");
    double acc = 0.0;
    for (const auto& [c, w] : mu.cells())
        acc = acc + w * family.evaluate(index, mu.partition().center_of(c));
    return acc;
}

}  // namespace srblab
