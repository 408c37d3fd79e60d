#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "srblab/errors.hpp"

namespace srblab {

inline constexpr int kMaxDim = 3;

// Coordinates of a point; only the first `dim` entries of the owning domain
// are meaningful, the rest stay 0.
using Point = std::array<double, kMaxDim>;

inline Point make_point(double x) { return {x, 0.0, 0.0}; }
inline Point make_point(double x, double y) { return {x, y, 0.0}; }
inline Point make_point(double x, double y, double z) { return {x, y, z}; }

// Axis-aligned box or torus: per-axis bounds plus periodic flags.
// Periodic axes wrap by floor reduction; non-periodic axes are closed ranges.
struct DomainDescriptor {
    int dim = 0;
    std::array<double, kMaxDim> lo{};
    std::array<double, kMaxDim> hi{};
    std::array<bool, kMaxDim> periodic{};

    DomainDescriptor() = default;
    DomainDescriptor(int d, std::array<double, kMaxDim> lo_, std::array<double, kMaxDim> hi_,
                     std::array<bool, kMaxDim> per);

    static DomainDescriptor unit_box(int d);
    static DomainDescriptor unit_torus(int d);

    double length(int axis) const { return hi[axis] - lo[axis]; }
    double min_axis_length() const;

    // Wraps periodic coordinates into [lo, hi); non-periodic coordinates pass through.
    Point wrap(Point p) const;
    // True if p (after wrapping) lies inside every non-periodic range.
    bool contains(Point p) const;

    bool operator==(const DomainDescriptor& o) const;
};

// Regular grid over a domain. Cells are half-open, lower-closed boxes; the
// top boundary of a non-periodic axis belongs to the last cell. Indices are
// row-major over axes.
struct GridPartition {
    DomainDescriptor domain;
    std::array<std::uint32_t, kMaxDim> resolution{};

    GridPartition() = default;
    GridPartition(DomainDescriptor dom, std::vector<std::uint32_t> res);

    std::uint64_t cell_count() const;
    double cell_width(int axis) const {
        return domain.length(axis) / static_cast<double>(resolution[axis]);
    }

    // Cell containing p; wraps periodic axes first. Throws DomainError when a
    // non-periodic coordinate is out of range.
    std::uint64_t cell_of(Point p) const;
    Point center_of(std::uint64_t cell) const;
    std::array<std::uint32_t, kMaxDim> decompose(std::uint64_t cell) const;

    // Partition over a subset of axes (ascending order required).
    GridPartition project(const std::vector<int>& axes) const;

    bool operator==(const GridPartition& o) const;
};

}  // namespace srblab
