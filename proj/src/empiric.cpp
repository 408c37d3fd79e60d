#include "srblab/empiric.hpp"

#include <cmath>

#include "srblab/errors.hpp"

namespace srblab {

EmpiricAccumulator::EmpiricAccumulator(std::shared_ptr<const GridPartition> partition)
    : partition_(std::move(partition)) {
    counts_.assign(partition_->cell_count(), 0);
}

void EmpiricAccumulator::push(const Point& p) {
    const std::uint64_t c = partition_->cell_of(p);
    if (counts_[c] == 0) ++occupied_;
    ++counts_[c];
    ++total_;
}

DiscreteMeasure EmpiricAccumulator::snapshot() const {
    if (total_ == 0) throw ArgumentError("snapshot of an empty accumulator");
    std::vector<DiscreteMeasure::Entry> cells;
    cells.reserve(occupied_);
    const double inv = 1.0 / static_cast<double>(total_);
    for (std::uint64_t c = 0; c < counts_.size(); ++c) {
        if (counts_[c]) cells.emplace_back(c, static_cast<double>(counts_[c]) * inv);
    }
    return DiscreteMeasure(partition_, std::move(cells));
}

CheckpointSchedule::CheckpointSchedule(std::vector<std::uint64_t> pts) : points(std::move(pts)) {
    if (points.empty()) throw ArgumentError("schedule must contain at least one checkpoint");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] == 0) throw ArgumentError("checkpoints must be positive");
        if (i > 0 && points[i] <= points[i - 1])
            throw ArgumentError("checkpoints must be strictly increasing");
    }
}

CheckpointSchedule CheckpointSchedule::geometric(std::uint64_t n0, double gamma,
                                                 std::uint64_t horizon) {
    if (n0 == 0) throw ArgumentError("n0 must be positive");
    if (!(gamma > 1.0)) throw ArgumentError("gamma must be > 1");
    if (horizon < n0) throw ArgumentError("horizon must be >= n0");
    std::vector<std::uint64_t> pts;
    double v = static_cast<double>(n0);
    std::uint64_t n = n0;
    while (n < horizon) {
        if (pts.empty() || n > pts.back()) pts.push_back(n);
        v *= gamma;
        n = static_cast<std::uint64_t>(std::ceil(v));
    }
    pts.push_back(horizon);
    return CheckpointSchedule(std::move(pts));
}

EmpiricRun empiric_sequence(const MapSystem& system, const Point& x0,
                            const CheckpointSchedule& schedule,
                            std::shared_ptr<const GridPartition> partition,
                            std::uint64_t burn_in) {
    return empiric_sequence_batch(system, {x0}, schedule, std::move(partition), burn_in)[0];
}

std::vector<EmpiricRun> empiric_sequence_batch(const MapSystem& system,
                                               const std::vector<Point>& x0s,
                                               const CheckpointSchedule& schedule,
                                               std::shared_ptr<const GridPartition> partition,
                                               std::uint64_t burn_in) {
    if (!(partition->domain == system.domain()))
        throw IncompatibilityError("partition domain differs from system domain");
    const std::size_t m = x0s.size();
    const DomainDescriptor& dom = system.domain();

    std::vector<Point> pts(m);
    std::vector<EmpiricAccumulator> accs;
    std::vector<EmpiricRun> runs(m);
    std::vector<char> alive(m, 1);
    accs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!dom.contains(x0s[i])) throw DomainError("initial point outside domain");
        pts[i] = dom.wrap(x0s[i]);
        accs.emplace_back(partition);
    }

    const std::uint64_t horizon = schedule.horizon();
    std::size_t live = m;
    // Orbit position j counts applied map steps; the accumulated points are
    // f^burn_in(x0) .. f^(burn_in + n - 1)(x0) when a snapshot at n is taken.
    for (std::uint64_t j = 0; j < burn_in && live > 0; ++j) {
        system.step_many(pts.data(), m);
        for (std::size_t i = 0; i < m; ++i) {
            if (!alive[i]) continue;
            if (!dom.contains(pts[i])) {
                runs[i].diverged_at = j + 1;
                alive[i] = 0;
                --live;
            } else {
                pts[i] = dom.wrap(pts[i]);
            }
        }
    }

    std::size_t next_cp = 0;
    for (std::uint64_t n = 0; n < horizon && live > 0; ++n) {
        for (std::size_t i = 0; i < m; ++i) {
            if (alive[i]) accs[i].push(pts[i]);
        }
        while (next_cp < schedule.points.size() && schedule.points[next_cp] == n + 1) {
            for (std::size_t i = 0; i < m; ++i) {
                if (alive[i]) runs[i].snapshots.push_back({n + 1, accs[i].snapshot()});
            }
            ++next_cp;
        }
        if (n + 1 == horizon) break;
        system.step_many(pts.data(), m);
        for (std::size_t i = 0; i < m; ++i) {
            if (!alive[i]) continue;
            if (!dom.contains(pts[i])) {
                runs[i].diverged_at = burn_in + n + 1;
                alive[i] = 0;
                --live;
            } else {
                pts[i] = dom.wrap(pts[i]);
            }
        }
    }
    return runs;
}

}  // namespace srblab
