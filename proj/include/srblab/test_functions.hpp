#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "srblab/domain.hpp"

namespace srblab {

// One member of the dense family: g(x) = (1 + cos(theta(x) + phase)) / 2 with
// theta(x) = sum_j c_j k_j u_j, u_j the axis coordinate normalized to [0,1],
// c_j = 2*pi on periodic axes and pi on non-periodic axes. Index 1 is the
// constant 1/2 (zero frequency). Values lie in [0,1] by construction.
struct TestFunction {
    std::array<int, kMaxDim> freq{};
    double phase = 0.0;      // 0 or pi/2
    double lipschitz = 0.0;  // pi * |freq|_2 / min axis length
    bool constant = false;   // zero-frequency special case
};

// Deterministic, total enumeration of the family over a fixed domain.
// Nonzero frequency vectors are canonical (first nonzero component positive)
// and ordered by (max-norm, number of nonzero components, lexicographic);
// each vector contributes phase 0 then phase pi/2. The series weight of
// index i is 2^-i.
class TestFunctionFamily {
public:
    TestFunctionFamily(DomainDescriptor domain, std::size_t count);

    const DomainDescriptor& domain() const { return domain_; }
    std::size_t size() const { return fns_.size(); }

    // 1-based index, matching the series weights 2^-i.
    const TestFunction& at(std::size_t index) const;
    double evaluate(std::size_t index, const Point& p) const;

    static double series_weight(std::size_t index);  // 2^-index, exact

private:
    DomainDescriptor domain_;
    std::vector<TestFunction> fns_;
};

}  // namespace srblab
