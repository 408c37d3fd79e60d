#include <doctest.h>

#include <cmath>
#include <memory>

#include "oracles.hpp"
#include "srblab/pomega.hpp"

using namespace srblab;

namespace {
struct Lab {
    std::shared_ptr<const GridPartition> part;
    std::shared_ptr<const TestFunctionFamily> fam;
    std::shared_ptr<const WeakStarMetric> metric;
    Lab(DomainDescriptor dom, std::vector<std::uint32_t> res, std::size_t trunc)
        : part(std::make_shared<const GridPartition>(dom, res)),
          fam(std::make_shared<const TestFunctionFamily>(dom, trunc)),
          metric(std::make_shared<const WeakStarMetric>(part, fam, trunc)) {}
};
}  // namespace

TEST_CASE("identity orbit: one representative, convergent, zero diameter") {
    Lab lab(DomainDescriptor::unit_box(2), {16, 16}, 16);
    const auto sys = make_system("identity", {{"dim", 2.0}});
    const auto res = estimate_pomega(*sys, make_point(0.3, 0.7),
                                     CheckpointSchedule::geometric(10, 1.5, 1000), *lab.metric,
                                     PomegaParams{});
    CHECK(res.estimate.convergent);
    CHECK(res.estimate.diameter == 0.0);
    REQUIRE(res.estimate.representatives.size() == 1);
    const auto ref = lab.metric->signature(dirac(make_point(0.3, 0.7), lab.part));
    CHECK(lab.metric->distance(lab.metric->signature(res.estimate.representatives[0]), ref) ==
          0.0);
}

TEST_CASE("contraction orbit: convergent to the boundary dirac") {
    Lab lab(DomainDescriptor::unit_box(2), {64, 64}, 24);
    const auto sys = make_system("contraction_half");
    const auto res = estimate_pomega(*sys, make_point(0.83, 0.41),
                                     CheckpointSchedule::geometric(1000, 1.25, 10000),
                                     *lab.metric, PomegaParams{});
    CHECK(res.estimate.convergent);
    REQUIRE(res.estimate.representatives.size() == 1);
    const auto limit = lab.metric->signature(dirac(make_point(0.0, 0.41), lab.part));
    CHECK(lab.metric->distance(lab.metric->signature(res.estimate.representatives[0]), limit) <=
          0.02);
    CHECK(res.estimate.window_min >= 5000);
    CHECK(res.estimate.window_max == 10000);
}

TEST_CASE("too few tail checkpoints raise an argument error") {
    Lab lab(DomainDescriptor::unit_box(2), {16, 16}, 8);
    const auto sys = make_system("identity", {{"dim", 2.0}});
    CHECK_THROWS_AS(estimate_pomega(*sys, make_point(0.5, 0.5), CheckpointSchedule({100}),
                                    *lab.metric, PomegaParams{}),
                    ArgumentError);
}

TEST_CASE("convergent estimates always expose exactly one representative") {
    Lab lab(DomainDescriptor::unit_torus(2), {32, 32}, 24);
    const auto sys = make_system("cat");
    const auto res = estimate_pomega(*sys, make_point(0.3317, 0.7177),
                                     CheckpointSchedule::geometric(1000, 1.25, 50000),
                                     *lab.metric, PomegaParams{});
    CHECK(res.estimate.convergent);
    CHECK(res.estimate.representatives.size() == 1);
    CHECK(res.estimate.populations[0] > 1);
}

TEST_CASE("segment projection: endpoints and midpoints recover exactly") {
    Lab lab(DomainDescriptor::unit_box(2), {16, 16}, 24);
    const auto a = dirac(make_point(0.1, 0.5), lab.part);
    const auto b = dirac(make_point(0.9, 0.5), lab.part);

    LimitSetEstimate est;
    est.representatives = {a, convex_combination({a, b}, {0.5, 0.5}), b};
    est.populations = {1, 1, 1};
    const auto proj = segment_projection_residual(est, a, b, *lab.metric);
    REQUIRE(proj.size() == 3);
    CHECK(proj[0].lambda == doctest::Approx(0.0).epsilon(1e-4));
    CHECK(proj[0].residual <= 1e-12);
    CHECK(proj[1].lambda == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(proj[1].residual <= 1e-12);
    CHECK(proj[2].lambda == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(proj[2].residual <= 1e-12);
}

TEST_CASE("segment projection matches a brute-force lambda grid") {
    Lab lab(DomainDescriptor::unit_box(1), {16}, 24);
    const auto a = dirac(make_point(0.15), lab.part);
    const auto b = dirac(make_point(0.85), lab.part);
    LimitSetEstimate est;
    est.representatives = {uniform_measure(lab.part)};
    est.populations = {1};
    const auto proj = segment_projection_residual(est, a, b, *lab.metric);

    const auto sig_r = lab.metric->signature(uniform_measure(lab.part));
    const auto sig_a = lab.metric->signature(a);
    const auto sig_b = lab.metric->signature(b);
    double best_l = 0.0, best_f = 1e9;
    for (double lam = 0.0; lam <= 1.0 + 1e-12; lam += 1e-5) {
        const double f = lab.metric->distance(sig_r, lab.metric->mix(sig_a, sig_b, lam));
        if (f < best_f) {
            best_f = f;
            best_l = lam;
        }
    }
    CHECK(proj[0].lambda == doctest::Approx(best_l).epsilon(5e-4));
    CHECK(proj[0].residual == doctest::Approx(best_f).epsilon(1e-9));
}

TEST_CASE("convexlike search walks the snapshot sequence") {
    Lab lab(DomainDescriptor::unit_box(2), {16, 16}, 24);
    const auto a = dirac(make_point(0.1, 0.5), lab.part);
    const auto b = dirac(make_point(0.9, 0.5), lab.part);
    // synthetic empiric path sliding from a to b
    std::vector<EmpiricSnapshot> snaps;
    for (int k = 0; k <= 10; ++k) {
        const double t = k / 10.0;
        snaps.push_back({static_cast<std::uint64_t>(100 + 10 * k),
                         convex_combination({a, b}, {1.0 - t, t})});
    }
    const double d_ab = lab.metric->distance(a, b);

    SUBCASE("lambda = 0 recurs near the first endpoint") {
        const auto res = convexlike_search(snaps, a, b, 0.0, 0.05 * d_ab, 90, *lab.metric);
        REQUIRE(res.found);
        CHECK(res.h == 100);  // the checkpoint sitting exactly on a
        CHECK(res.achieved == 0.0);
    }
    SUBCASE("lambda = 1 lands near the far endpoint") {
        const auto res = convexlike_search(snaps, a, b, 1.0, 0.05 * d_ab, 100, *lab.metric);
        REQUIRE(res.found);
        CHECK(std::fabs(res.achieved - d_ab) <= 0.05 * d_ab);
    }
    SUBCASE("lambda = 1/2 finds the middle of the path") {
        const auto res = convexlike_search(snaps, a, b, 0.5, 0.06 * d_ab, 100, *lab.metric);
        REQUIRE(res.found);
        CHECK(std::fabs(res.achieved - 0.5 * d_ab) <= 0.06 * d_ab);
        // first satisfying index: verify by exhaustive scan
        for (std::size_t i = 0; i < res.index; ++i) {
            if (snaps[i].n <= 100) continue;
            const double d = lab.metric->distance(lab.metric->signature(snaps[i].measure),
                                                  lab.metric->signature(a));
            CHECK(std::fabs(d - 0.5 * d_ab) > 0.06 * d_ab);
        }
    }
    SUBCASE("unreachable tolerance reports the closest miss") {
        std::vector<EmpiricSnapshot> sparse{snaps[0], snaps[10]};
        const auto res = convexlike_search(sparse, a, b, 0.5, 1e-6, 0, *lab.metric);
        CHECK(!res.found);
        CHECK(res.closest_miss > 1e-6);
        CHECK(res.closest_miss <= 0.5 * d_ab + 1e-12);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(convexlike_search(snaps, a, b, 1.5, 0.1, 0, *lab.metric), ArgumentError);
        CHECK_THROWS_AS(convexlike_search(snaps, a, b, 0.5, 0.0, 0, *lab.metric), ArgumentError);
    }
}
