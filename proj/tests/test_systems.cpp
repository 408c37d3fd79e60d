#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "srblab/rng.hpp"
#include "srblab/systems.hpp"

using namespace srblab;

TEST_CASE("registry knows the built-ins and rejects strangers") {
    CHECK(registered_systems().size() == 7);
    CHECK_THROWS_AS(make_system("catt"), RegistryError);
    CHECK_THROWS_AS(make_system("identity", {{"dim", 5.0}}), ArgumentError);
    CHECK_THROWS_AS(make_system("cat", {{"speed", 2.0}}), ArgumentError);
    CHECK_THROWS_AS(make_system("bowen_eye", {{"dt", 0.3}}), ArgumentError);  // h/dt not integral
    CHECK_THROWS_AS(make_system("bowen_eye", {{"skew", -1.0}}), ArgumentError);
}

TEST_CASE("cat map formulas") {
    const auto cat = make_system("cat");
    const Point fixed = cat->step(make_point(0.0, 0.0));
    CHECK(fixed[0] == 0.0);
    CHECK(fixed[1] == 0.0);

    // exact rational oracle: (x,y) -> (x+y, x+2y) mod 1 on (1/10, 2/10), three steps
    long num_x = 1, num_y = 2, den = 10;
    for (int s = 0; s < 3; ++s) {
        const long nx = (num_x + num_y) % den;
        const long ny = (num_x + 2 * num_y) % den;
        num_x = nx;
        num_y = ny;
    }
    CHECK(num_x == 1);  // f^3(0.1, 0.2) = (0.1, 0.4) exactly over the rationals
    CHECK(num_y == 4);
    Point p = make_point(0.1, 0.2);
    for (int s = 0; s < 3; ++s) p = cat->step(p);
    CHECK(p[0] == doctest::Approx(0.1).epsilon(1e-13));
    CHECK(p[1] == doctest::Approx(0.4).epsilon(1e-13));
}

TEST_CASE("tripling: rational periodic point lands exactly") {
    const auto t = make_system("tripling");
    CHECK(t->step(make_point(1.0 / 3.0))[0] == 0.0);
}

TEST_CASE("contraction_half halves the first coordinate only") {
    const auto c = make_system("contraction_half");
    const Point q = c->step(make_point(0.8, 0.3));
    CHECK(q[0] == 0.4);
    CHECK(q[1] == 0.3);
    const Point r = iterate(*c, make_point(1.0, 0.5), 10);
    CHECK(r[0] == std::ldexp(1.0, -10));
    CHECK(r[1] == 0.5);
}

TEST_CASE("identity stays put") {
    const auto id = make_system("identity", {{"dim", 2.0}});
    const Point p = make_point(0.123, 0.456);
    const Point q = iterate(*id, p, 1000);
    CHECK(q[0] == p[0]);
    CHECK(q[1] == p[1]);
}

TEST_CASE("skew product: first coordinate frozen, rest cat-mixed") {
    const auto s = make_system("skew_cat");
    Point p = make_point(0.37, 0.1, 0.2);
    for (int i = 0; i < 50; ++i) {
        p = s->step(p);
        CHECK(p[0] == 0.37);
    }
}

TEST_CASE("iterate visits every step in order and reports divergence") {
    const auto c = make_system("contraction_half");
    std::uint64_t visits = 0;
    iterate(*c, make_point(1.0, 0.0), 8, [&](std::uint64_t j, const Point& q) {
        ++visits;
        CHECK(q[0] == std::ldexp(1.0, -static_cast<int>(j)));
    });
    CHECK(visits == 8);

    // expanding non-periodic affine map leaves [0,1] and reports the step
    const auto exp2 = make_system(
        "affine_custom", {{"dim", 1.0}, {"m00", 2.0}, {"periodic0", 0.0}});
    try {
        iterate(*exp2, make_point(0.3), 10);
        FAIL("expected divergence");
    } catch (const OrbitDivergenceError& e) {
        CHECK(e.step() == 2);  // 0.3 -> 0.6 -> 1.2 leaves at step 2
    }
}

TEST_CASE("domain closure under long iteration of the torus maps") {
    for (const char* name : {"tripling", "cat"}) {
        const auto sys = make_system(name);
        bool inside = true;
        // large sweep: 1e6 random starts, 1e3 steps each
        for (std::uint64_t s = 0; s < 1000000 && inside; ++s) {
            Point p = lebesgue_point(sys->domain(), 4242, s);
            for (int j = 0; j < 1000; ++j) {
                p = sys->step(p);
            }
            inside = sys->domain().contains(p);
        }
        CHECK(inside);
    }
    for (const char* name : {"contraction_half", "skew_cat"}) {
        const auto sys = make_system(name);
        bool inside = true;
        for (std::uint64_t s = 0; s < 10000 && inside; ++s) {
            Point p = lebesgue_point(sys->domain(), 4242, s);
            for (int j = 0; j < 1000 && inside; ++j) {
                p = sys->step(p);
                inside = sys->domain().contains(p);
            }
        }
        CHECK(inside);
    }
}

TEST_CASE("orbits are deterministic: two runs agree bitwise") {
    const auto cat = make_system("cat");
    Point a = make_point(0.1234, 0.5678), b = a;
    for (int i = 0; i < 10000; ++i) {
        a = cat->step(a);
        b = cat->step(b);
        REQUIRE(a == b);
    }
}

TEST_CASE("eye saddles are fixed points of the time map") {
    const auto sys = make_system("bowen_eye");
    for (double sx : {-1.0, 1.0}) {
        const Point q = sys->step(make_point(sx, 0.0));
        CHECK(std::fabs(q[0] - sx) <= 1e-8);
        CHECK(std::fabs(q[1]) <= 1e-8);
    }
}

TEST_CASE("eye circles are invariant and interior orbits stay in the box") {
    const auto sys = make_system("bowen_eye");
    const double e = 0.7, rsq = 1.0 + e * e;
    auto c1 = [&](const Point& p) { return p[0] * p[0] + (p[1] - e) * (p[1] - e) - rsq; };
    // start on circle C1 (its bottom point) and integrate t = 25
    Point p = make_point(0.0, e - std::sqrt(rsq));
    for (int s = 0; s < 50; ++s) {
        p = sys->step(p);
        CHECK(std::fabs(c1(p)) <= 1e-6);
    }
    // interior starts remain inside the domain box
    Point q = make_point(0.3, -0.1);
    for (int s = 0; s < 2000; ++s) {
        q = sys->step(q);
        REQUIRE(sys->domain().contains(q));
    }
}

TEST_CASE("eye metadata records saddles, repeller and contraction ratios") {
    const auto sys = make_system("bowen_eye");
    const auto& md = sys->metadata();
    CHECK(md.at("saddle_a_x") == -1.0);
    CHECK(md.at("saddle_b_x") == 1.0);
    CHECK(md.at("repeller_x") == 0.0);
    CHECK(md.at("saddle_ratio_a") > 1.0);
    CHECK(md.at("saddle_ratio_product") > 1.0);
    CHECK(md.at("eigenvalue_unstable") > 0.0);
    CHECK(md.at("eigenvalue_stable") < 0.0);
}

TEST_CASE("batched stepping equals one-at-a-time stepping bitwise") {
    const auto sys = make_system("bowen_eye");
    std::vector<Point> batch;
    for (int i = 0; i < 6; ++i)
        batch.push_back(make_point(-0.5 + 0.2 * i, 0.05 * (i - 3)));
    std::vector<Point> singles = batch;
    for (int s = 0; s < 20; ++s) {
        sys->step_many(batch.data(), batch.size());
        for (auto& p : singles) p = sys->step(p);
        for (std::size_t i = 0; i < batch.size(); ++i) REQUIRE(batch[i] == singles[i]);
    }
}

TEST_CASE("affine_custom applies matrix, offset and periodic wrap") {
    const auto rot = make_system("affine_custom",
                                 {{"dim", 2.0}, {"m00", 0.0}, {"m01", 1.0}, {"m10", 1.0},
                                  {"m11", 0.0}, {"b0", 0.25}});
    const Point q = rot->step(make_point(0.5, 0.9));
    CHECK(q[0] == doctest::Approx(0.15).epsilon(1e-12));  // 0.9 + 0.25 mod 1
    CHECK(q[1] == 0.5);
}
