#include "srblab/clustering.hpp"

#include <numeric>

namespace srblab {

double DistanceMatrix::max() const {
    double m = 0.0;
    for (double v : data_) m = v > m ? v : m;
    return m;
}

std::vector<std::size_t> single_linkage(const DistanceMatrix& d, double threshold) {
    const std::size_t n = d.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d.at(i, j) <= threshold) {
                const std::size_t ri = find(i), rj = find(j);
                if (ri != rj) parent[rj > ri ? rj : ri] = rj > ri ? ri : rj;
            }
        }
    }
    std::vector<std::size_t> labels(n);
    std::vector<std::size_t> order;  // root -> label in first-appearance order
    std::vector<std::size_t> root_label(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (root_label[r] == n) {
            root_label[r] = order.size();
            order.push_back(r);
        }
        labels[i] = root_label[r];
    }
    return labels;
}

}  // namespace srblab
