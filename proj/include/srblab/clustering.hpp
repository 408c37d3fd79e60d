#pragma once

#include <cstddef>
#include <vector>

namespace srblab {

// Symmetric pairwise distances, stored dense. d(i,i) = 0.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    std::size_t size() const { return n_; }
    double& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double d) {
        data_[i * n_ + j] = d;
        data_[j * n_ + i] = d;
    }
    double max() const;

private:
    std::size_t n_;
    std::vector<double> data_;
};

// Single-linkage clusters at the given threshold: connected components of the
// graph with edges d(i,j) <= threshold. Returns cluster ids 0..k-1 labeled in
// order of first appearance, so the labeling is deterministic.
std::vector<std::size_t> single_linkage(const DistanceMatrix& d, double threshold);

inline std::size_t cluster_count(const std::vector<std::size_t>& labels) {
    std::size_t k = 0;
    for (std::size_t l : labels) k = l + 1 > k ? l + 1 : k;
    return k;
}

}  // namespace srblab
