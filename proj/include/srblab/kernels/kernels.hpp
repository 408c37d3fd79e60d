#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace srblab::kernels {

// Parameters of the planar two-circle eye field; see src/kernels/eye_field.hpp
// for the formulas.
struct EyeParams {
    double circle_offset;  // circle centers at (0, +-offset); saddles at (+-1, 0)
    double attraction;     // transverse attraction coefficient toward the cycle
    double skew;           // saddle contraction ratio is 1 + skew
    double tempo;          // time-rescale at the saddles (stretches sojourns)
    double speed_cap;      // global speed limit of the integrated field
};

// Data-parallel inner loops behind the measure/orbit code, in one dispatch
// table. Every implementation of a kernel must produce bit-identical output:
//   - accumulate_scaled and eye_rk4 keep the per-element operation order of
//     the scalar reference (vectorization runs across independent elements
//     or lanes; division and square root are correctly rounded everywhere);
//   - weighted_l1 uses a fixed 4-stripe summation order: stripe j holds the
//     partial sum over indices i == j (mod 4), remainder terms fold into
//     stripes 0..2, final reduction is ((s0+s1)+s2)+s3.
// The project is compiled with -ffp-contract=off so the scalar reference
// cannot silently fuse multiply-add.
struct KernelOps {
    const char* name;

    // dst[i] = dst[i] + scale * src[i] for i in [0, n)
    void (*accumulate_scaled)(double* dst, const double* src, double scale, std::size_t n);

    // sum_i w[i] * |a[i] - b[i]| in the 4-stripe order described above
    double (*weighted_l1)(const double* a, const double* b, const double* w, std::size_t n);

    // Advances `lanes` (<= 4) independent orbits of the eye field by `steps`
    // classical RK4 steps of size dt, clamping both coordinates to
    // [box_lo, box_hi] after every step. xs/ys are updated in place.
    void (*eye_rk4)(double* xs, double* ys, int lanes, std::uint64_t steps, double dt,
                    const EyeParams& params, double box_lo, double box_hi);
};

// Kernel set selected at startup: best the CPU supports, unless the
// SRBLAB_KERNEL environment variable ("scalar", "avx2", "neon") forces one.
const KernelOps& active();

// Scalar reference set, always available.
const KernelOps& scalar_ops();

// Names of all kernel sets usable on this machine.
std::vector<std::string> available();

}  // namespace srblab::kernels
