#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "srblab/kernels/kernels.hpp"
#include "eye_field.hpp"

namespace srblab::kernels {
namespace {

void accumulate_scaled_avx2(double* dst, const double* src, double scale, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(scale);
    const std::size_t n4 = n & ~std::size_t(3);
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d d = _mm256_loadu_pd(dst + i);
        const __m256d x = _mm256_loadu_pd(src + i);
        d = _mm256_add_pd(d, _mm256_mul_pd(vs, x));
        _mm256_storeu_pd(dst + i, d);
    }
    for (; i < n; ++i) dst[i] = dst[i] + scale * src[i];
}

double weighted_l1_avx2(const double* a, const double* b, const double* w, std::size_t n) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t(3);
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        const __m256d vw = _mm256_loadu_pd(w + i);
        const __m256d ad = _mm256_and_pd(abs_mask, _mm256_sub_pd(va, vb));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(vw, ad));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (; i < n; ++i) lanes[i - n4] = lanes[i - n4] + w[i] * std::fabs(a[i] - b[i]);
    return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

struct Pack4 {
    __m256d v;
    static Pack4 broadcast(double x) { return {_mm256_set1_pd(x)}; }
    static Pack4 one() { return broadcast(1.0); }
    static Pack4 zero() { return {_mm256_setzero_pd()}; }
    friend Pack4 operator+(Pack4 a, Pack4 b) { return {_mm256_add_pd(a.v, b.v)}; }
    friend Pack4 operator-(Pack4 a, Pack4 b) { return {_mm256_sub_pd(a.v, b.v)}; }
    friend Pack4 operator*(Pack4 a, Pack4 b) { return {_mm256_mul_pd(a.v, b.v)}; }
    friend Pack4 operator/(Pack4 a, Pack4 b) { return {_mm256_div_pd(a.v, b.v)}; }
    static Pack4 sqrt(Pack4 a) { return {_mm256_sqrt_pd(a.v)}; }
    static Pack4 min(Pack4 a, Pack4 b) { return {_mm256_min_pd(a.v, b.v)}; }
    static Pack4 clamp(Pack4 x, Pack4 lo, Pack4 hi) {
        return {_mm256_min_pd(_mm256_max_pd(x.v, lo.v), hi.v)};
    }
};

void eye_rk4_avx2(double* xs, double* ys, int lanes, std::uint64_t steps, double dt,
                  const EyeParams& params, double box_lo, double box_hi) {
    const detail::EyeFieldParams fp{params.circle_offset, params.attraction, params.skew,
                                    params.tempo, params.speed_cap};
    alignas(32) double bx[4], by[4];
    for (int l = 0; l < 4; ++l) {
        bx[l] = xs[l < lanes ? l : 0];  // pad idle lanes with lane 0
        by[l] = ys[l < lanes ? l : 0];
    }
    Pack4 x{_mm256_load_pd(bx)}, y{_mm256_load_pd(by)};
    detail::eye_rk4_run(x, y, steps, dt, fp, box_lo, box_hi);
    _mm256_store_pd(bx, x.v);
    _mm256_store_pd(by, y.v);
    for (int l = 0; l < lanes; ++l) {
        xs[l] = bx[l];
        ys[l] = by[l];
    }
}

}  // namespace

const KernelOps& avx2_ops() {
    static const KernelOps ops{"avx2", &accumulate_scaled_avx2, &weighted_l1_avx2, &eye_rk4_avx2};
    return ops;
}

}  // namespace srblab::kernels

#endif  // x86_64
