#include <cmath>
#include <cstddef>
#include <cstdint>

#include "srblab/kernels/kernels.hpp"
#include "eye_field.hpp"

namespace srblab::kernels {
namespace {

void accumulate_scaled_scalar(double* dst, const double* src, double scale, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = dst[i] + scale * src[i];
}

double weighted_l1_scalar(const double* a, const double* b, const double* w, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t n4 = n & ~std::size_t(3);
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        acc[0] = acc[0] + w[i + 0] * std::fabs(a[i + 0] - b[i + 0]);
        acc[1] = acc[1] + w[i + 1] * std::fabs(a[i + 1] - b[i + 1]);
        acc[2] = acc[2] + w[i + 2] * std::fabs(a[i + 2] - b[i + 2]);
        acc[3] = acc[3] + w[i + 3] * std::fabs(a[i + 3] - b[i + 3]);
    }
    for (; i < n; ++i) acc[i - n4] = acc[i - n4] + w[i] * std::fabs(a[i] - b[i]);
    return ((acc[0] + acc[1]) + acc[2]) + acc[3];
}

// One-lane pack; SIMD variants reuse the same template with wide packs.
struct Pack1 {
    double v;
    static Pack1 broadcast(double x) { return {x}; }
    static Pack1 one() { return {1.0}; }
    static Pack1 zero() { return {0.0}; }
    friend Pack1 operator+(Pack1 a, Pack1 b) { return {a.v + b.v}; }
    friend Pack1 operator-(Pack1 a, Pack1 b) { return {a.v - b.v}; }
    friend Pack1 operator*(Pack1 a, Pack1 b) { return {a.v * b.v}; }
    friend Pack1 operator/(Pack1 a, Pack1 b) { return {a.v / b.v}; }
    static Pack1 sqrt(Pack1 a) { return {std::sqrt(a.v)}; }
    static Pack1 min(Pack1 a, Pack1 b) { return {a.v < b.v ? a.v : b.v}; }
    static Pack1 clamp(Pack1 x, Pack1 lo, Pack1 hi) {
        double t = x.v > lo.v ? x.v : lo.v;  // matches SIMD max/min for finite input
        return {t < hi.v ? t : hi.v};
    }
};

void eye_rk4_scalar(double* xs, double* ys, int lanes, std::uint64_t steps, double dt,
                    const EyeParams& params, double box_lo, double box_hi) {
    const detail::EyeFieldParams fp{params.circle_offset, params.attraction, params.skew,
                                    params.tempo, params.speed_cap};
    for (int l = 0; l < lanes; ++l) {
        Pack1 x{xs[l]}, y{ys[l]};
        detail::eye_rk4_run(x, y, steps, dt, fp, box_lo, box_hi);
        xs[l] = x.v;
        ys[l] = y.v;
    }
}

}  // namespace

const KernelOps& scalar_ops() {
    static const KernelOps ops{"scalar", &accumulate_scaled_scalar, &weighted_l1_scalar,
                               &eye_rk4_scalar};
    return ops;
}

}  // namespace srblab::kernels
