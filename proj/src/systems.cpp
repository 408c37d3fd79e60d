#include "srblab/systems.hpp"

#include <cmath>
#include <set>

#include "srblab/errors.hpp"
#include "srblab/kernels/kernels.hpp"

namespace srblab {
namespace {

double mod1(double x) {
    double y = x - std::floor(x);
    return y >= 1.0 ? 0.0 : y;
}

double take_param(const std::map<std::string, double>& params, const std::string& key,
                  double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, double>& params,
                    const std::set<std::string>& known, const std::string& system) {
    for (const auto& [k, v] : params) {
        if (!known.count(k))
            throw ArgumentError("unknown parameter \"" + k + "\" for system " + system);
    }
}

class IdentitySystem final : public MapSystem {
public:
    explicit IdentitySystem(const std::map<std::string, double>& params) {
        reject_unknown(params, {"dim"}, "identity");
        const double dim = take_param(params, "dim", 2.0);
        const int d = static_cast<int>(dim);
        if (d < 1 || d > kMaxDim || dim != d)
            throw ArgumentError("identity: dim must be an integer in [1, 3]");
        name_ = "identity";
        domain_ = DomainDescriptor::unit_box(d);
        params_ = {{"dim", static_cast<double>(d)}};
        formula_ = "x -> x on [0,1]^d";
        default_resolution_.assign(d, 32);
    }
    Point step(const Point& p) const override { return p; }
};

class TriplingSystem final : public MapSystem {
public:
    explicit TriplingSystem(const std::map<std::string, double>& params) {
        reject_unknown(params, {}, "tripling");
        name_ = "tripling";
        domain_ = DomainDescriptor::unit_torus(1);
        formula_ = "x -> 3x mod 1 on S^1";
        default_resolution_ = {64};
    }
    Point step(const Point& p) const override { return {mod1(3.0 * p[0]), 0.0, 0.0}; }
};

class CatSystem final : public MapSystem {
public:
    explicit CatSystem(const std::map<std::string, double>& params) {
        reject_unknown(params, {}, "cat");
        name_ = "cat";
        domain_ = DomainDescriptor::unit_torus(2);
        formula_ = "(x,y) -> (x+y, x+2y) mod 1 on T^2";
        default_resolution_ = {64, 64};
    }
    Point step(const Point& p) const override {
        return {mod1(p[0] + p[1]), mod1(p[0] + 2.0 * p[1]), 0.0};
    }
};

class ContractionHalfSystem final : public MapSystem {
public:
    explicit ContractionHalfSystem(const std::map<std::string, double>& params) {
        reject_unknown(params, {}, "contraction_half");
        name_ = "contraction_half";
        domain_ = DomainDescriptor::unit_box(2);
        formula_ = "(x,y) -> (x/2, y) on [0,1]^2";
        default_resolution_ = {64, 64};
    }
    Point step(const Point& p) const override { return {0.5 * p[0], p[1], 0.0}; }
};

class SkewCatSystem final : public MapSystem {
public:
    explicit SkewCatSystem(const std::map<std::string, double>& params) {
        reject_unknown(params, {}, "skew_cat");
        name_ = "skew_cat";
        domain_ = DomainDescriptor::unit_torus(3);
        formula_ = "(x,y,z) -> (x, y+z, y+2z) mod 1 on T^3";
        default_resolution_ = {16, 32, 32};
    }
    Point step(const Point& p) const override {
        return {p[0], mod1(p[1] + p[2]), mod1(p[1] + 2.0 * p[2])};
    }
};

// Time-h map of the two-circle eye flow on [-2,2]^2 (see
// src/kernels/eye_field.hpp for the field). Two hyperbolic saddles
// A = (-1,0) and B = (1,0) sit on a pair of exactly invariant circles; the
// lens between them is the attracting heteroclinic cycle and encloses the
// repelling equilibrium C = (0,0). Each saddle contracts by ratio
// c = 1 + skew, so c_A c_B = (1 + skew)^2 > 1 and time averages along
// interior orbits oscillate between the saddle Diracs. The separatrix
// branches all lie on the circles, so orbits riding the cycle at rounding
// distance keep shuttling between A and B instead of escaping; the tempo
// parameter stretches the saddle passage times to keep that shuttling visible
// at long horizons. Integration is classical fixed-step RK4 with clamping to
// the closed domain box.
class BowenEyeSystem final : public MapSystem {
public:
    explicit BowenEyeSystem(const std::map<std::string, double>& params) {
        reject_unknown(params,
                       {"dt", "sample_time", "circle_offset", "attraction", "skew", "tempo",
                        "speed_cap"},
                       "bowen_eye");
        dt_ = take_param(params, "dt", 2.5e-3);
        sample_time_ = take_param(params, "sample_time", 0.5);
        eye_.circle_offset = take_param(params, "circle_offset", 0.7);
        eye_.attraction = take_param(params, "attraction", 2.0);
        eye_.skew = take_param(params, "skew", 0.5);
        eye_.tempo = take_param(params, "tempo", 0.0015);
        eye_.speed_cap = take_param(params, "speed_cap", 8.0);
        if (!(dt_ > 0.0)) throw ArgumentError("bowen_eye: dt must be > 0");
        if (!(sample_time_ > 0.0)) throw ArgumentError("bowen_eye: sample_time must be > 0");
        const double e = eye_.circle_offset;
        if (!(e > 0.0 && e + std::sqrt(1.0 + e * e) < 2.0))
            throw ArgumentError("bowen_eye: circle_offset must keep both circles inside [-2,2]^2");
        if (!(eye_.attraction > 0.0)) throw ArgumentError("bowen_eye: attraction must be > 0");
        if (!(eye_.skew > 0.0 && eye_.skew <= 2.0))
            throw ArgumentError("bowen_eye: skew must be in (0, 2]");
        if (!(eye_.tempo > 0.0 && eye_.tempo <= 1.0))
            throw ArgumentError("bowen_eye: tempo must be in (0, 1]");
        if (!(eye_.speed_cap > 0.0)) throw ArgumentError("bowen_eye: speed_cap must be > 0");
        const double ratio = sample_time_ / dt_;
        substeps_ = static_cast<std::uint64_t>(std::llround(ratio));
        if (substeps_ == 0 || std::fabs(ratio - static_cast<double>(substeps_)) > 1e-9)
            throw ArgumentError("bowen_eye: sample_time must be an integer multiple of dt");

        name_ = "bowen_eye";
        domain_ = DomainDescriptor(2, {-2.0, -2.0, 0.0}, {2.0, 2.0, 0.0}, {false, false, false});
        params_ = {{"dt", dt_},
                   {"sample_time", sample_time_},
                   {"circle_offset", eye_.circle_offset},
                   {"attraction", eye_.attraction},
                   {"skew", eye_.skew},
                   {"tempo", eye_.tempo},
                   {"speed_cap", eye_.speed_cap}};
        const double lam_u = 8.0 * e * eye_.tempo;
        const double lam_s = -8.0 * e * (1.0 + eye_.skew) * eye_.tempo;
        const double c = 1.0 + eye_.skew;
        metadata_ = {{"saddle_a_x", -1.0}, {"saddle_a_y", 0.0},
                     {"saddle_b_x", 1.0},  {"saddle_b_y", 0.0},
                     {"repeller_x", 0.0},  {"repeller_y", 0.0},
                     {"eigenvalue_unstable", lam_u},
                     {"eigenvalue_stable", lam_s},
                     {"saddle_ratio_a", c}, {"saddle_ratio_b", c},
                     {"saddle_ratio_product", c * c}};
        formula_ = "time-" + std::to_string(sample_time_) +
                   " map of the two-circle eye flow (saddles (+-1,0), repeller (0,0)) on [-2,2]^2";
        default_resolution_ = {64, 64};
    }

    Point step(const Point& p) const override {
        double x = p[0], y = p[1];
        kernels::active().eye_rk4(&x, &y, 1, substeps_, dt_, eye_, domain_.lo[0], domain_.hi[0]);
        return {x, y, 0.0};
    }

    void step_many(Point* pts, std::size_t count) const override {
        double xs[4], ys[4];
        std::size_t i = 0;
        while (i < count) {
            const int lanes = static_cast<int>(std::min<std::size_t>(4, count - i));
            for (int l = 0; l < lanes; ++l) {
                xs[l] = pts[i + l][0];
                ys[l] = pts[i + l][1];
            }
            kernels::active().eye_rk4(xs, ys, lanes, substeps_, dt_, eye_, domain_.lo[0],
                                      domain_.hi[0]);
            for (int l = 0; l < lanes; ++l) pts[i + l] = {xs[l], ys[l], 0.0};
            i += lanes;
        }
    }

    std::size_t batch_width() const override { return 4; }

private:
    double dt_, sample_time_;
    kernels::EyeParams eye_{};
    std::uint64_t substeps_;
};

// User affine map x -> M x + b on [0,1]^d with mod-1 wrap on periodic axes.
class AffineCustomSystem final : public MapSystem {
public:
    explicit AffineCustomSystem(const std::map<std::string, double>& params) {
        std::set<std::string> known{"dim"};
        for (int i = 0; i < kMaxDim; ++i) {
            known.insert("b" + std::to_string(i));
            known.insert("periodic" + std::to_string(i));
            for (int j = 0; j < kMaxDim; ++j)
                known.insert("m" + std::to_string(i) + std::to_string(j));
        }
        reject_unknown(params, known, "affine_custom");
        const double dim = take_param(params, "dim", 2.0);
        dim_ = static_cast<int>(dim);
        if (dim_ < 1 || dim_ > kMaxDim || dim != dim_)
            throw ArgumentError("affine_custom: dim must be an integer in [1, 3]");
        std::array<bool, kMaxDim> periodic{};
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j)
                matrix_[i][j] = take_param(params, "m" + std::to_string(i) + std::to_string(j),
                                           i == j ? 1.0 : 0.0);
            offset_[i] = take_param(params, "b" + std::to_string(i), 0.0);
            periodic[i] = take_param(params, "periodic" + std::to_string(i), 1.0) != 0.0;
        }
        name_ = "affine_custom";
        domain_ = DomainDescriptor(dim_, {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0},
                                   {periodic[0], periodic[1], periodic[2]});
        params_ = params;
        params_["dim"] = dim_;
        formula_ = "x -> M x + b, mod 1 on periodic axes, on [0,1]^d";
        default_resolution_.assign(dim_, 32);
    }

    Point step(const Point& p) const override {
        Point out{};
        for (int i = 0; i < dim_; ++i) {
            double v = offset_[i];
            for (int j = 0; j < dim_; ++j) v += matrix_[i][j] * p[j];
            out[i] = domain_.periodic[i] ? mod1(v) : v;
        }
        return out;
    }

private:
    int dim_ = 2;
    std::array<std::array<double, kMaxDim>, kMaxDim> matrix_{};
    std::array<double, kMaxDim> offset_{};
};

}  // namespace

void MapSystem::step_many(Point* pts, std::size_t count) const {
    for (std::size_t i = 0; i < count; ++i) pts[i] = step(pts[i]);
}

std::shared_ptr<const MapSystem> make_system(const std::string& name,
                                             const std::map<std::string, double>& params) {
    if (name == "identity") return std::make_shared<IdentitySystem>(params);
    if (name == "tripling") return std::make_shared<TriplingSystem>(params);
    if (name == "cat") return std::make_shared<CatSystem>(params);
    if (name == "contraction_half") return std::make_shared<ContractionHalfSystem>(params);
    if (name == "skew_cat") return std::make_shared<SkewCatSystem>(params);
    if (name == "bowen_eye") return std::make_shared<BowenEyeSystem>(params);
    if (name == "affine_custom") return std::make_shared<AffineCustomSystem>(params);
    throw RegistryError("unknown system \"" + name + "\"");
}

std::vector<std::string> registered_systems() {
    return {"identity", "tripling", "cat", "contraction_half", "skew_cat", "bowen_eye",
            "affine_custom"};
}

Point iterate(const MapSystem& system, const Point& x0, std::uint64_t steps,
              const std::function<void(std::uint64_t, const Point&)>& visitor) {
    const DomainDescriptor& dom = system.domain();
    if (!dom.contains(x0)) throw DomainError("initial point outside domain");
    Point p = dom.wrap(x0);
    for (std::uint64_t j = 1; j <= steps; ++j) {
        p = system.step(p);
        if (!dom.contains(p)) throw OrbitDivergenceError("orbit left the domain", j);
        p = dom.wrap(p);
        if (visitor) visitor(j, p);
    }
    return p;
}

}  // namespace srblab
