#include <doctest.h>

#include <cmath>
#include <memory>

#include "srblab/observable.hpp"

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

ObservableParams cat_params(std::uint64_t horizon) {
    ObservableParams p{CheckpointSchedule::geometric(500, 1.25, horizon), PomegaParams{}};
    p.threads = 2;
    return p;
}
}  // namespace

TEST_CASE("lebesgue sampling is deterministic, seed-sensitive and uniform") {
    const auto dom = DomainDescriptor::unit_box(1);
    const SamplePlan one{1, 42, dom};
    const auto p1 = sample_initial_conditions(one);
    const auto p2 = sample_initial_conditions(one);
    CHECK(p1[0] == p2[0]);

    const auto q = sample_initial_conditions({1, 43, dom});
    CHECK(p1[0] != q[0]);

    // 10 equal bins over 1e4 samples: each within 1000 +- 100 (beyond 3 sigma
    // of Binomial(1e4, 0.1), checked against the frozen seed)
    const auto pts = sample_initial_conditions({10000, 20260809, dom});
    std::array<int, 10> bins{};
    for (const auto& p : pts) {
        auto b = static_cast<int>(p[0] * 10.0);
        if (b == 10) b = 9;
        ++bins[b];
    }
    for (int b : bins) {
        CHECK(b >= 900);
        CHECK(b <= 1100);
    }
}

TEST_CASE("cat: single candidate, full basin, srb flag set") {
    Lab lab(DomainDescriptor::unit_torus(2), {32, 32}, 24);
    const auto sys = make_system("cat");
    const SamplePlan plan{16, 7, sys->domain()};
    const auto est = estimate_observable_set(*sys, plan, *lab.metric, cat_params(20000));

    REQUIRE(est.candidates.size() == 1);
    CHECK(est.excluded_samples == 0);
    const auto& cand = est.candidates[0];
    CHECK(cand.support_samples == 16);
    CHECK(cand.isolated);
    CHECK(cand.srb);
    for (const auto& b : cand.basin) {
        CHECK(b.fraction == 1.0);
        CHECK(b.ci_halfwidth ==
              doctest::Approx(std::sqrt(std::log(2.0 / 0.05) / 32.0)).epsilon(1e-12));
    }
    const double d = lab.metric->distance(lab.metric->signature(cand.representative),
                                          lab.metric->signature(uniform_measure(lab.part)));
    CHECK(d <= 0.05);

    SUBCASE("basin fractions never increase as epsilon shrinks") {
        for (std::size_t j = 1; j < cand.basin.size(); ++j)
            CHECK(cand.basin[j].fraction <= cand.basin[j - 1].fraction);
    }
    SUBCASE("srb candidates pass the retention rule") {
        CHECK(cand.basin.front().fraction >= 2.0 / 16.0);
    }
    SUBCASE("holdout coverage is full and deleting the candidate zeroes it") {
        const SamplePlan holdout{12, 8, sys->domain()};
        const double cov =
            minimality_check(est, *sys, holdout, *lab.metric, cat_params(20000), 0.1);
        CHECK(cov == 1.0);
        ObservableSetEstimate empty = est;
        empty.candidates.clear();
        CHECK(minimality_check(empty, *sys, holdout, *lab.metric, cat_params(20000), 0.1) == 0.0);
    }
    SUBCASE("reports are independent of worker count") {
        auto serial = cat_params(20000);
        serial.threads = 1;
        const auto est1 = estimate_observable_set(*sys, plan, *lab.metric, serial);
        REQUIRE(est1.candidates.size() == 1);
        CHECK(est1.candidates[0].representative.cells() == cand.representative.cells());
    }
}

TEST_CASE("cat sweep classifies as single and passes the cross-checks") {
    Lab lab(DomainDescriptor::unit_torus(2), {32, 32}, 24);
    const auto sys = make_system("cat");
    std::vector<ObservableSetEstimate> sweep;
    for (std::size_t n : {6, 10, 14})
        sweep.push_back(
            estimate_observable_set(*sys, {n, 7, sys->domain()}, *lab.metric, cat_params(20000)));
    const auto rep = cardinality_report(sweep);
    CHECK(rep.cls == "single");
    CHECK(rep.finite_all_srb);
    CHECK(rep.isolated_all_srb);
    CHECK_THROWS_AS(cardinality_report({sweep[0], sweep[1]}), ArgumentError);
    std::vector<ObservableSetEstimate> bad{sweep[1], sweep[0], sweep[2]};
    CHECK_THROWS_AS(cardinality_report(bad), ArgumentError);
}

TEST_CASE("identity: candidates are the sampled diracs, coverage needs density") {
    Lab lab(DomainDescriptor::unit_box(1), {64}, 24);
    const auto sys = make_system("identity", {{"dim", 1.0}});
    ObservableParams params{CheckpointSchedule::geometric(10, 2.0, 100), PomegaParams{}};
    params.pomega.delta_cluster = 1e-6;  // diracs on distinct cells stay apart
    const SamplePlan plan{12, 99, sys->domain()};
    const auto est = estimate_observable_set(*sys, plan, *lab.metric, params);
    CHECK(est.candidates.size() >= 10);  // 12 samples, possibly two sharing a cell
    for (const auto& cand : est.candidates) CHECK(!cand.srb);  // fraction ~1/12 < phi at tight eps

    // a fresh holdout dirac is covered only if an estimation dirac sits nearby
    const double cov_tight = minimality_check(est, *sys, {20, 123, sys->domain()}, *lab.metric,
                                              params, 1e-4);
    const double cov_loose = minimality_check(est, *sys, {20, 123, sys->domain()}, *lab.metric,
                                              params, 0.5);
    CHECK(cov_tight < 1.0);
    CHECK(cov_loose == 1.0);
    CHECK(cov_tight <= cov_loose);
}

TEST_CASE("every run with a surviving sample yields at least one candidate") {
    Lab lab(DomainDescriptor::unit_torus(1), {32}, 16);
    const auto sys = make_system("tripling");
    ObservableParams params{CheckpointSchedule::geometric(100, 1.5, 2000), PomegaParams{}};
    for (std::size_t n : {1, 2, 5}) {
        const auto est =
            estimate_observable_set(*sys, {n, 5, sys->domain()}, *lab.metric, params);
        CHECK(est.candidates.size() >= 1);
    }
}

TEST_CASE("diverging samples are excluded and counted") {
    Lab lab(DomainDescriptor::unit_box(1), {16}, 8);
    const auto sys = make_system("affine_custom", {{"dim", 1.0}, {"m00", 2.0}, {"periodic0", 0.0}});
    ObservableParams params{CheckpointSchedule::geometric(10, 2.0, 100), PomegaParams{}};
    const auto est = estimate_observable_set(*sys, {8, 77, sys->domain()}, *lab.metric, params);
    CHECK(est.excluded_samples == 8);
    CHECK(est.candidates.empty());
}

TEST_CASE("classify_srb distinguishes decaying from stable fractions") {
    Lab lab(DomainDescriptor::unit_box(1), {64}, 24);
    // synthetic limit estimates: 10 convergent diracs spread over the axis
    std::vector<LimitSetEstimate> estimates;
    for (int i = 0; i < 10; ++i) {
        LimitSetEstimate le;
        le.convergent = true;
        le.representatives.push_back(dirac(make_point((i + 0.5) / 10.0), lab.part));
        le.populations.push_back(1);
        estimates.push_back(std::move(le));
    }
    CandidateMeasure cand{dirac(make_point(0.55), lab.part), 0, {}, {}, 0.0, false, false};
    classify_srb(cand, estimates, {0.4, 0.2, 0.1, 0.004}, 0.3, 10, *lab.metric);
    CHECK(!cand.srb);  // at eps = 0.004 only the matching dirac remains: 1/10 < 0.3
    CHECK(cand.decay_ratio_avg < 1.0);

    CandidateMeasure wide{dirac(make_point(0.55), lab.part), 0, {}, {}, 0.0, false, false};
    classify_srb(wide, estimates, {0.4, 0.2}, 0.3, 10, *lab.metric);
    CHECK(wide.srb);  // coarse rungs keep most diracs within range
}
