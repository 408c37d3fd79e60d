#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "srblab/domain.hpp"

namespace srblab {

// A named discrete-time dynamical system: a deterministic step on a box or
// torus domain. Immutable after construction, safe to share across threads.
class MapSystem {
public:
    virtual ~MapSystem() = default;

    const std::string& name() const { return name_; }
    const DomainDescriptor& domain() const { return domain_; }
    const std::map<std::string, double>& params() const { return params_; }
    // Derived facts worth reporting (fixed points, eigenvalue ratios, ...).
    const std::map<std::string, double>& metadata() const { return metadata_; }
    const std::string& formula() const { return formula_; }
    // Per-axis grid resolution suggested for this system.
    const std::vector<std::uint32_t>& default_resolution() const { return default_resolution_; }

    virtual Point step(const Point& p) const = 0;

    // Applies one step to `count` independent points; SIMD-batched where the
    // system supports it. Default is a scalar loop.
    virtual void step_many(Point* pts, std::size_t count) const;
    // Preferred batch width for step_many (1 when there is no batch kernel).
    virtual std::size_t batch_width() const { return 1; }

protected:
    std::string name_;
    DomainDescriptor domain_;
    std::map<std::string, double> params_;
    std::map<std::string, double> metadata_;
    std::string formula_;
    std::vector<std::uint32_t> default_resolution_;
};

// Instantiates a built-in system. Known names: identity, tripling, cat,
// contraction_half, skew_cat, bowen_eye, affine_custom. Unknown names raise
// RegistryError; out-of-range parameters raise ArgumentError.
std::shared_ptr<const MapSystem> make_system(const std::string& name,
                                             const std::map<std::string, double>& params = {});

std::vector<std::string> registered_systems();

// Applies `steps` map steps from x0; the visitor (when set) sees every point
// after each step, i.e. f^1(x0) ... f^steps(x0). Throws OrbitDivergenceError
// (carrying the failing step) when a step produces a non-finite coordinate or
// leaves a non-periodic domain.
Point iterate(const MapSystem& system, const Point& x0, std::uint64_t steps,
              const std::function<void(std::uint64_t, const Point&)>& visitor = nullptr);

}  // namespace srblab
