#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "srblab/measure.hpp"
#include "srblab/systems.hpp"

namespace srblab {

// Streaming counts of orbit visits per grid cell. snapshot() yields the
// empiric probability mu_n = counts / n.
class EmpiricAccumulator {
public:
    explicit EmpiricAccumulator(std::shared_ptr<const GridPartition> partition);

    void push(const Point& p);
    std::uint64_t count() const { return total_; }
    std::uint64_t occupied_cells() const { return occupied_; }
    DiscreteMeasure snapshot() const;

private:
    std::shared_ptr<const GridPartition> partition_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
    std::uint64_t occupied_ = 0;
};

// Strictly increasing snapshot times; the last entry is the run length.
struct CheckpointSchedule {
    std::vector<std::uint64_t> points;

    explicit CheckpointSchedule(std::vector<std::uint64_t> pts);
    // n_k = ceil(n0 * gamma^k) capped at horizon (deduplicated; horizon always included).
    static CheckpointSchedule geometric(std::uint64_t n0, double gamma, std::uint64_t horizon);
    std::uint64_t horizon() const { return points.back(); }
};

struct EmpiricSnapshot {
    std::uint64_t n;  // orbit length of this snapshot (after burn-in)
    DiscreteMeasure measure;
};

// Snapshots of one orbit plus divergence bookkeeping: when the orbit
// diverged, `diverged_at` holds the failing step and `snapshots` the
// checkpoints reached before it.
struct EmpiricRun {
    std::vector<EmpiricSnapshot> snapshots;
    std::optional<std::uint64_t> diverged_at;
};

// Runs one orbit pass and snapshots the empiric measure at every scheduled n.
// The first `burn_in` orbit points are discarded before accumulation starts;
// snapshot n counts the n post-burn-in points starting at f^burn_in(x0).
EmpiricRun empiric_sequence(const MapSystem& system, const Point& x0,
                            const CheckpointSchedule& schedule,
                            std::shared_ptr<const GridPartition> partition,
                            std::uint64_t burn_in = 0);

// Same pass over several independent orbits advanced in lockstep, letting
// batch-capable systems (the ODE time map) step SIMD lanes together. Results
// are bit-identical to per-orbit empiric_sequence calls.
std::vector<EmpiricRun> empiric_sequence_batch(const MapSystem& system,
                                               const std::vector<Point>& x0s,
                                               const CheckpointSchedule& schedule,
                                               std::shared_ptr<const GridPartition> partition,
                                               std::uint64_t burn_in = 0);

}  // namespace srblab
