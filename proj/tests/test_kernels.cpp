#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "srblab/kernels/kernels.hpp"

using namespace srblab;

namespace {

// Plain sequential forms, independent of the kernel implementations.
double naive_weighted_l1(const std::vector<double>& a, const std::vector<double>& b,
                         const std::vector<double>& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * std::fabs(a[i] - b[i]);
    return s;
}

}  // namespace

TEST_CASE("every available kernel set matches the scalar reference bit for bit") {
    std::mt19937_64 gen(123);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto& sc = kernels::scalar_ops();
    const auto& ac = kernels::active();
    INFO("active kernel: ", ac.name);

    for (std::size_t n : {1u, 3u, 4u, 7u, 24u, 64u, 129u}) {
        std::vector<double> a(n), b(n), w(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = u(gen);
            b[i] = u(gen);
            w[i] = std::ldexp(1.0, -static_cast<int>(i % 40 + 1));
        }
        std::vector<double> d1(n), d2(n);
        for (std::size_t i = 0; i < n; ++i) d1[i] = d2[i] = u(gen);
        sc.accumulate_scaled(d1.data(), a.data(), 0.7310585786300049, n);
        ac.accumulate_scaled(d2.data(), a.data(), 0.7310585786300049, n);
        for (std::size_t i = 0; i < n; ++i) CHECK(d1[i] == d2[i]);

        CHECK(sc.weighted_l1(a.data(), b.data(), w.data(), n) ==
              ac.weighted_l1(a.data(), b.data(), w.data(), n));
    }
}

TEST_CASE("weighted_l1 stripe order stays close to the naive sum") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 24;
        std::vector<double> a(n), b(n), w(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = u(gen);
            b[i] = u(gen);
            w[i] = std::ldexp(1.0, -static_cast<int>(i + 1));
        }
        const double got = kernels::active().weighted_l1(a.data(), b.data(), w.data(), n);
        CHECK(got == doctest::Approx(naive_weighted_l1(a, b, w)).epsilon(1e-14));
        CHECK(got >= 0.0);
        CHECK(kernels::active().weighted_l1(b.data(), a.data(), w.data(), n) == got);
        CHECK(kernels::active().weighted_l1(a.data(), a.data(), w.data(), n) == 0.0);
    }
}

TEST_CASE("eye RK4 lanes are independent of batch composition") {
    const auto& ac = kernels::active();
    double xs[4] = {0.3, -0.7, 0.05, 1.4};
    double ys[4] = {0.1, 0.2, -0.4, 0.6};
    double xs_batch[4], ys_batch[4];
    for (int l = 0; l < 4; ++l) {
        xs_batch[l] = xs[l];
        ys_batch[l] = ys[l];
    }
    const kernels::EyeParams eye{0.7, 2.0, 0.5, 0.003, 8.0};
    ac.eye_rk4(xs_batch, ys_batch, 4, 1000, 2.5e-3, eye, -2.0, 2.0);
    for (int l = 0; l < 4; ++l) {
        double x = xs[l], y = ys[l];
        ac.eye_rk4(&x, &y, 1, 1000, 2.5e-3, eye, -2.0, 2.0);
        CHECK(x == xs_batch[l]);
        CHECK(y == ys_batch[l]);
    }
}

TEST_CASE("eye RK4 respects the clamp box") {
    const auto& ac = kernels::active();
    const kernels::EyeParams eye{0.7, 2.0, 0.5, 0.003, 8.0};
    double x = 1.95, y = 1.95;
    ac.eye_rk4(&x, &y, 1, 200000, 2.5e-3, eye, -2.0, 2.0);
    CHECK(x <= 2.0);
    CHECK(x >= -2.0);
    CHECK(y <= 2.0);
    CHECK(y >= -2.0);
}

TEST_CASE("available kernels include scalar") {
    const auto names = kernels::available();
    CHECK(names.size() >= 1);
    CHECK(names.front() == "scalar");
}
