#pragma once

#include <cstdint>

// RK4 stepping of the two-circle eye field, written once over a pack type V
// so the scalar and SIMD builds share one expression tree (required for
// bit-identical results across kernel sets; division and square root are
// correctly rounded in both). V needs +, -, *, /, sqrt, min and clamp.
//
// Geometry: circles C1 = x^2 + (y-e)^2 - r^2 and C2 = x^2 + (y+e)^2 - r^2
// with r^2 = 1 + e^2 meet at the saddles A = (-1,0), B = (1,0); the product
// P = C1 C2 is a Darboux invariant of the field
//
//   G = X_P - u0 P grad(P) + C1 s(x) X_C2 + C2 rr(x) X_C1,
//   s(x) = (sigma/2)(1-x),  rr(x) = (sigma/2)(1+x),
//
// (X_F is the Hamiltonian field of F) so both circles are exactly invariant,
// dP/dt = P [ -u0 |grad P|^2 + 8 e x (s - rr) ] keeps the cycle attracting
// from both sides, and the skew terms set the saddle eigenvalues to
// 8e tau0 (unstable) and -8e (1+sigma) tau0 (stable): contraction ratio
// 1 + sigma at each saddle. The integrated field is G slowed by the tempo
// factor T(x) = tau0 + (1-tau0) min((1-x^2)^2, 1) and speed-capped:
// F = T G / sqrt(1 + |G|^2 / vcap^2).
namespace srblab::kernels::detail {

struct EyeFieldParams {
    double circle_offset;  // e
    double attraction;     // u0
    double skew;           // sigma
    double tempo;          // tau0
    double speed_cap;      // vcap
};

template <class V>
struct EyePack {
    V e, rsq, u0, half_sigma, tau0, one_minus_tau0, inv_vcap_sq;
};

template <class V>
inline EyePack<V> make_eye_pack(const EyeFieldParams& p) {
    return {V::broadcast(p.circle_offset),
            V::broadcast(1.0 + p.circle_offset * p.circle_offset),
            V::broadcast(p.attraction),
            V::broadcast(0.5 * p.skew),
            V::broadcast(p.tempo),
            V::broadcast(1.0 - p.tempo),
            V::broadcast(1.0 / (p.speed_cap * p.speed_cap))};
}

template <class V>
inline void eye_field(const EyePack<V>& p, V x, V y, V& fx, V& fy) {
    const V one = V::one();
    const V two = V::broadcast(2.0);
    const V x2 = x * x;
    const V ym = y - p.e;
    const V yp = y + p.e;
    const V c1 = x2 + ym * ym - p.rsq;
    const V c2 = x2 + yp * yp - p.rsq;
    const V c1x = two * x, c1y = two * ym;
    const V c2x = two * x, c2y = two * yp;

    const V pr = c1 * c2;
    const V px = c1x * c2 + c1 * c2x;
    const V py = c1y * c2 + c1 * c2y;

    const V s = p.half_sigma * (one - x);
    const V rr = p.half_sigma * (one + x);

    // G = X_P - u0 P grad(P) + C1 s X_C2 + C2 rr X_C1
    const V upr = p.u0 * pr;
    V gx = py - upr * px + c1 * s * c2y + c2 * rr * c1y;
    V gy = V::zero() - px - upr * py - c1 * s * c2x - c2 * rr * c1x;

    const V omx2 = one - x2;
    const V bump = V::min(omx2 * omx2, one);
    const V tempo = p.tau0 + p.one_minus_tau0 * bump;
    const V scale = tempo / V::sqrt(one + (gx * gx + gy * gy) * p.inv_vcap_sq);
    fx = scale * gx;
    fy = scale * gy;
}

template <class V>
inline void eye_rk4_run(V& x, V& y, std::uint64_t steps, double dt, const EyeFieldParams& params,
                        double box_lo, double box_hi) {
    const EyePack<V> p = make_eye_pack<V>(params);
    const V vdt = V::broadcast(dt);
    const V half_dt = V::broadcast(dt * 0.5);
    const V sixth_dt = V::broadcast(dt / 6.0);
    const V lo = V::broadcast(box_lo);
    const V hi = V::broadcast(box_hi);
    const V two = V::broadcast(2.0);

    V k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
    for (std::uint64_t s = 0; s < steps; ++s) {
        eye_field(p, x, y, k1x, k1y);
        eye_field(p, x + half_dt * k1x, y + half_dt * k1y, k2x, k2y);
        eye_field(p, x + half_dt * k2x, y + half_dt * k2y, k3x, k3y);
        eye_field(p, x + vdt * k3x, y + vdt * k3y, k4x, k4y);
        x = x + sixth_dt * (((k1x + two * k2x) + two * k3x) + k4x);
        y = y + sixth_dt * (((k1y + two * k2y) + two * k3y) + k4y);
        x = V::clamp(x, lo, hi);
        y = V::clamp(y, lo, hi);
    }
}

}  // namespace srblab::kernels::detail
