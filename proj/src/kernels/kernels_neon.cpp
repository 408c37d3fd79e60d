#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "srblab/kernels/kernels.hpp"
#include "eye_field.hpp"

namespace srblab::kernels {
namespace {

void accumulate_scaled_neon(double* dst, const double* src, double scale, std::size_t n) {
    const float64x2_t vs = vdupq_n_f64(scale);
    const std::size_t n2 = n & ~std::size_t(1);
    std::size_t i = 0;
    for (; i < n2; i += 2) {
        float64x2_t d = vld1q_f64(dst + i);
        const float64x2_t x = vld1q_f64(src + i);
        d = vaddq_f64(d, vmulq_f64(vs, x));
        vst1q_f64(dst + i, d);
    }
    for (; i < n; ++i) dst[i] = dst[i] + scale * src[i];
}

// Keeps the reference 4-stripe order: two registers hold stripes {0,1} and {2,3}.
double weighted_l1_neon(const double* a, const double* b, const double* w, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    const std::size_t n4 = n & ~std::size_t(3);
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        const float64x2_t d01 = vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        const float64x2_t d23 = vabsq_f64(vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
        acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(w + i), d01));
        acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(w + i + 2), d23));
    }
    double lanes[4] = {vgetq_lane_f64(acc01, 0), vgetq_lane_f64(acc01, 1),
                       vgetq_lane_f64(acc23, 0), vgetq_lane_f64(acc23, 1)};
    for (; i < n; ++i) lanes[i - n4] = lanes[i - n4] + w[i] * std::fabs(a[i] - b[i]);
    return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

struct Pack4N {
    float64x2_t v0, v1;
    static Pack4N broadcast(double x) { return {vdupq_n_f64(x), vdupq_n_f64(x)}; }
    static Pack4N one() { return broadcast(1.0); }
    static Pack4N zero() { return broadcast(0.0); }
    friend Pack4N operator+(Pack4N a, Pack4N b) {
        return {vaddq_f64(a.v0, b.v0), vaddq_f64(a.v1, b.v1)};
    }
    friend Pack4N operator-(Pack4N a, Pack4N b) {
        return {vsubq_f64(a.v0, b.v0), vsubq_f64(a.v1, b.v1)};
    }
    friend Pack4N operator*(Pack4N a, Pack4N b) {
        return {vmulq_f64(a.v0, b.v0), vmulq_f64(a.v1, b.v1)};
    }
    friend Pack4N operator/(Pack4N a, Pack4N b) {
        return {vdivq_f64(a.v0, b.v0), vdivq_f64(a.v1, b.v1)};
    }
    static Pack4N sqrt(Pack4N a) { return {vsqrtq_f64(a.v0), vsqrtq_f64(a.v1)}; }
    static Pack4N min(Pack4N a, Pack4N b) {
        return {vminq_f64(a.v0, b.v0), vminq_f64(a.v1, b.v1)};
    }
    static Pack4N clamp(Pack4N x, Pack4N lo, Pack4N hi) {
        return {vminq_f64(vmaxq_f64(x.v0, lo.v0), hi.v0),
                vminq_f64(vmaxq_f64(x.v1, lo.v1), hi.v1)};
    }
};

void eye_rk4_neon(double* xs, double* ys, int lanes, std::uint64_t steps, double dt,
                  const EyeParams& params, double box_lo, double box_hi) {
    const detail::EyeFieldParams fp{params.circle_offset, params.attraction, params.skew,
                                    params.tempo, params.speed_cap};
    double bx[4], by[4];
    for (int l = 0; l < 4; ++l) {
        bx[l] = xs[l < lanes ? l : 0];
        by[l] = ys[l < lanes ? l : 0];
    }
    Pack4N x{vld1q_f64(bx), vld1q_f64(bx + 2)};
    Pack4N y{vld1q_f64(by), vld1q_f64(by + 2)};
    detail::eye_rk4_run(x, y, steps, dt, fp, box_lo, box_hi);
    vst1q_f64(bx, x.v0);
    vst1q_f64(bx + 2, x.v1);
    vst1q_f64(by, y.v0);
    vst1q_f64(by + 2, y.v1);
    for (int l = 0; l < lanes; ++l) {
        xs[l] = bx[l];
        ys[l] = by[l];
    }
}

}  // namespace

const KernelOps& neon_ops() {
    static const KernelOps ops{"neon", &accumulate_scaled_neon, &weighted_l1_neon, &eye_rk4_neon};
    return ops;
}

}  // namespace srblab::kernels

#endif  // __aarch64__
