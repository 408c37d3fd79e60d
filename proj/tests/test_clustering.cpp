#include <doctest.h>

#include <cmath>
#include <random>

#include "srblab/clustering.hpp"

using namespace srblab;

namespace {
DistanceMatrix from_points(const std::vector<double>& xs) {
    DistanceMatrix d(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) d.set(i, j, std::fabs(xs[i] - xs[j]));
    return d;
}
}  // namespace

TEST_CASE("single linkage merges chains and splits gaps") {
    const auto d = from_points({0.0, 0.1, 0.2, 1.0, 1.05});
    const auto labels = single_linkage(d, 0.15);
    CHECK(cluster_count(labels) == 2);
    CHECK(labels[0] == labels[1]);
    CHECK(labels[1] == labels[2]);
    CHECK(labels[3] == labels[4]);
    CHECK(labels[0] != labels[3]);
}

TEST_CASE("labels are assigned in first-appearance order") {
    const auto d = from_points({5.0, 0.0, 5.1, 0.05});
    const auto labels = single_linkage(d, 0.2);
    CHECK(labels == std::vector<std::size_t>{0, 1, 0, 1});
}

TEST_CASE("halving the threshold never decreases the cluster count") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> xs(20);
        for (auto& x : xs) x = u(gen);
        const auto d = from_points(xs);
        for (double thr : {0.4, 0.2, 0.1, 0.05, 0.025}) {
            const auto coarse = cluster_count(single_linkage(d, thr));
            const auto fine = cluster_count(single_linkage(d, thr / 2.0));
            CHECK(fine >= coarse);
        }
    }
}

TEST_CASE("cluster soundness: every member has a neighbor in its own cluster") {
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> xs(30);
        for (auto& x : xs) x = u(gen);
        const auto d = from_points(xs);
        const double thr = 0.07;
        const auto labels = single_linkage(d, thr);
        std::vector<std::size_t> sizes(cluster_count(labels), 0);
        for (auto l : labels) ++sizes[l];
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (sizes[labels[i]] == 1) continue;
            double nearest = 1e9;
            for (std::size_t j = 0; j < xs.size(); ++j)
                if (j != i && labels[j] == labels[i]) nearest = std::min(nearest, d.at(i, j));
            CHECK(nearest <= thr);
        }
        // members of different clusters are farther than the threshold
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                if (labels[i] != labels[j]) CHECK(d.at(i, j) > thr);
    }
}
