#include <doctest.h>

#include "srblab/domain.hpp"

using namespace srblab;

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(DomainDescriptor(0, {}, {}, {}), ArgumentError);
    CHECK_THROWS_AS(DomainDescriptor(1, {1.0, 0, 0}, {0.0, 0, 0}, {}), ArgumentError);
    const auto box = DomainDescriptor::unit_box(2);
    CHECK(box.dim == 2);
    CHECK(box.min_axis_length() == 1.0);
}

TEST_CASE("periodic wrap uses floor reduction") {
    const auto t = DomainDescriptor::unit_torus(1);
    CHECK(t.wrap(make_point(1.25))[0] == doctest::Approx(0.25));
    CHECK(t.wrap(make_point(-0.25))[0] == doctest::Approx(0.75));
    CHECK(t.wrap(make_point(1.0))[0] == 0.0);
    CHECK(t.wrap(make_point(-3.0))[0] == 0.0);
}

TEST_CASE("cell indexing is lower-closed half-open") {
    GridPartition part(DomainDescriptor::unit_box(1), {4});
    CHECK(part.cell_of(make_point(0.0)) == 0);
    CHECK(part.cell_of(make_point(0.25)) == 1);      // boundary belongs to the upper cell
    CHECK(part.cell_of(make_point(0.999999)) == 3);
    CHECK(part.cell_of(make_point(1.0)) == 3);       // closed top on non-periodic axes
    CHECK_THROWS_AS(part.cell_of(make_point(1.5)), DomainError);
    CHECK_THROWS_AS(part.cell_of(make_point(-0.1)), DomainError);
}

TEST_CASE("periodic axis wraps indices") {
    GridPartition part(DomainDescriptor::unit_torus(1), {4});
    CHECK(part.cell_of(make_point(1.0)) == 0);  // wrap-around identity
    CHECK(part.cell_of(make_point(-0.1)) == 3);
}

TEST_CASE("row-major cell decomposition round-trips") {
    GridPartition part(DomainDescriptor::unit_torus(3), {4, 8, 16});
    CHECK(part.cell_count() == 4u * 8u * 16u);
    for (std::uint64_t c : {0ull, 1ull, 511ull, 300ull}) {
        const auto ids = part.decompose(c);
        std::uint64_t back = (static_cast<std::uint64_t>(ids[0]) * 8 + ids[1]) * 16 + ids[2];
        CHECK(back == c);
        CHECK(part.cell_of(part.center_of(c)) == c);
    }
}

TEST_CASE("projection keeps selected axes") {
    GridPartition part(DomainDescriptor::unit_torus(3), {4, 8, 16});
    const auto sub = part.project({0, 2});
    CHECK(sub.domain.dim == 2);
    CHECK(sub.resolution[0] == 4);
    CHECK(sub.resolution[1] == 16);
    CHECK_THROWS_AS(part.project({}), ArgumentError);
    CHECK_THROWS_AS(part.project({2, 0}), ArgumentError);
    CHECK_THROWS_AS(part.project({3}), ArgumentError);
}
