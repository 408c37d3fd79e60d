#include "srblab/domain.hpp"

#include <cmath>
#include <string>

namespace srblab {

DomainDescriptor::DomainDescriptor(int d, std::array<double, kMaxDim> lo_,
                                   std::array<double, kMaxDim> hi_,
                                   std::array<bool, kMaxDim> per)
    : dim(d), lo(lo_), hi(hi_), periodic(per) {
    if (d < 1 || d > kMaxDim)
        throw ArgumentError("domain dimension must be in [1, " + std::to_string(kMaxDim) + "]");
    for (int k = 0; k < d; ++k) {
        if (!(lo[k] < hi[k]))
            throw ArgumentError("domain axis " + std::to_string(k) + " needs lo < hi");
    }
}

DomainDescriptor DomainDescriptor::unit_box(int d) {
    DomainDescriptor dom;
    dom.dim = d;
    for (int k = 0; k < d; ++k) {
        dom.lo[k] = 0.0;
        dom.hi[k] = 1.0;
        dom.periodic[k] = false;
    }
    if (d < 1 || d > kMaxDim) throw ArgumentError("bad dimension");
    return dom;
}

DomainDescriptor DomainDescriptor::unit_torus(int d) {
    DomainDescriptor dom = unit_box(d);
    for (int k = 0; k < d; ++k) dom.periodic[k] = true;
    return dom;
}

double DomainDescriptor::min_axis_length() const {
    double m = length(0);
    for (int k = 1; k < dim; ++k) m = std::min(m, length(k));
    return m;
}

Point DomainDescriptor::wrap(Point p) const {
    for (int k = 0; k < dim; ++k) {
        if (!periodic[k]) continue;
        const double len = length(k);
        double u = (p[k] - lo[k]) / len;
        u -= std::floor(u);
        if (u >= 1.0) u = 0.0;  // guards u == 1.0 after rounding
        p[k] = lo[k] + u * len;
    }
    return p;
}

bool DomainDescriptor::contains(Point p) const {
    p = wrap(p);
    for (int k = 0; k < dim; ++k) {
        if (!std::isfinite(p[k])) return false;
        if (!periodic[k] && (p[k] < lo[k] || p[k] > hi[k])) return false;
    }
    return true;
}

bool DomainDescriptor::operator==(const DomainDescriptor& o) const {
    if (dim != o.dim) return false;
    for (int k = 0; k < dim; ++k) {
        if (lo[k] != o.lo[k] || hi[k] != o.hi[k] || periodic[k] != o.periodic[k]) return false;
    }
    return true;
}

GridPartition::GridPartition(DomainDescriptor dom, std::vector<std::uint32_t> res)
    : domain(dom) {
    if (static_cast<int>(res.size()) != dom.dim)
        throw ArgumentError("resolution list length must equal domain dimension");
    for (int k = 0; k < dom.dim; ++k) {
        if (res[k] == 0) throw ArgumentError("resolution must be positive on every axis");
        resolution[k] = res[k];
    }
}

std::uint64_t GridPartition::cell_count() const {
    std::uint64_t n = 1;
    for (int k = 0; k < domain.dim; ++k) n *= resolution[k];
    return n;
}

std::uint64_t GridPartition::cell_of(Point p) const {
    p = domain.wrap(p);
    std::uint64_t idx = 0;
    for (int k = 0; k < domain.dim; ++k) {
        if (!std::isfinite(p[k]))
            throw DomainError("non-finite coordinate on axis " + std::to_string(k));
        const std::uint32_t r = resolution[k];
        if (!domain.periodic[k] && (p[k] < domain.lo[k] || p[k] > domain.hi[k]))
            throw DomainError("coordinate " + std::to_string(p[k]) + " outside axis " +
                              std::to_string(k) + " range [" + std::to_string(domain.lo[k]) +
                              ", " + std::to_string(domain.hi[k]) + "]");
        double t = (p[k] - domain.lo[k]) / cell_width(k);
        auto i = static_cast<std::int64_t>(t);
        if (i < 0) i = 0;
        if (i >= static_cast<std::int64_t>(r)) i = r - 1;  // closed top cell / rounding guard
        idx = idx * r + static_cast<std::uint64_t>(i);
    }
    return idx;
}

std::array<std::uint32_t, kMaxDim> GridPartition::decompose(std::uint64_t cell) const {
    std::array<std::uint32_t, kMaxDim> out{};
    for (int k = domain.dim - 1; k >= 0; --k) {
        out[k] = static_cast<std::uint32_t>(cell % resolution[k]);
        cell /= resolution[k];
    }
    return out;
}

Point GridPartition::center_of(std::uint64_t cell) const {
    const auto ids = decompose(cell);
    Point p{};
    for (int k = 0; k < domain.dim; ++k)
        p[k] = domain.lo[k] + (static_cast<double>(ids[k]) + 0.5) * cell_width(k);
    return p;
}

GridPartition GridPartition::project(const std::vector<int>& axes) const {
    if (axes.empty()) throw ArgumentError("axis subset must be nonempty");
    for (std::size_t j = 0; j < axes.size(); ++j) {
        if (axes[j] < 0 || axes[j] >= domain.dim)
            throw ArgumentError("axis index " + std::to_string(axes[j]) + " out of range");
        if (j > 0 && axes[j] <= axes[j - 1])
            throw ArgumentError("axis subset must be strictly increasing");
    }
    DomainDescriptor sub;
    sub.dim = static_cast<int>(axes.size());
    std::vector<std::uint32_t> res;
    for (std::size_t j = 0; j < axes.size(); ++j) {
        sub.lo[j] = domain.lo[axes[j]];
        sub.hi[j] = domain.hi[axes[j]];
        sub.periodic[j] = domain.periodic[axes[j]];
        res.push_back(resolution[axes[j]]);
    }
    return GridPartition(sub, res);
}

bool GridPartition::operator==(const GridPartition& o) const {
    if (!(domain == o.domain)) return false;
    for (int k = 0; k < domain.dim; ++k)
        if (resolution[k] != o.resolution[k]) return false;
    return true;
}

}  // namespace srblab
