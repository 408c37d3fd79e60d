#include "srblab/metric.hpp"

#include <string>

#include "srblab/errors.hpp"
#include "srblab/kernels/kernels.hpp"

namespace srblab {

WeakStarMetric::WeakStarMetric(std::shared_ptr<const GridPartition> partition,
                               std::shared_ptr<const TestFunctionFamily> family,
                               std::size_t truncation)
    : partition_(std::move(partition)), family_(std::move(family)), truncation_(truncation) {
    if (truncation_ == 0) throw ArgumentError("truncation must be >= 1");
    if (truncation_ > family_->size())
        throw ArgumentError("truncation " + std::to_string(truncation_) + " exceeds family size " +
                            std::to_string(family_->size()));
    if (!(family_->domain() == partition_->domain))
        throw IncompatibilityError("family and partition domains differ");

    const std::uint64_t cells = partition_->cell_count();
    table_.resize(cells * truncation_);
    for (std::uint64_t c = 0; c < cells; ++c) {
        const Point center = partition_->center_of(c);
        for (std::size_t i = 0; i < truncation_; ++i)
            table_[c * truncation_ + i] = family_->evaluate(i + 1, center);
    }
    weights_.resize(truncation_);
    for (std::size_t i = 0; i < truncation_; ++i)
        weights_[i] = TestFunctionFamily::series_weight(i + 1);
}

std::vector<double> WeakStarMetric::signature(const DiscreteMeasure& mu) const {
    if (!(mu.partition() == *partition_))
        throw IncompatibilityError("measure lives on a different partition");
    std::vector<double> sig(truncation_, 0.0);
    const auto& ops = kernels::active();
    for (const auto& [c, w] : mu.cells())
        ops.accumulate_scaled(sig.data(), table_.data() + c * truncation_, w, truncation_);
    return sig;
}

double WeakStarMetric::distance(const std::vector<double>& sig_a,
                                const std::vector<double>& sig_b) const {
    return kernels::active().weighted_l1(sig_a.data(), sig_b.data(), weights_.data(),
                                         truncation_);
}

double WeakStarMetric::distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu) const {
    return distance(signature(mu), signature(nu));
}

std::vector<double> WeakStarMetric::mix(const std::vector<double>& sig_a,
                                        const std::vector<double>& sig_b, double lambda) const {
    std::vector<double> out(truncation_);
    const double one_minus = 1.0 - lambda;
    for (std::size_t i = 0; i < truncation_; ++i)
        out[i] = one_minus * sig_a[i] + lambda * sig_b[i];
    return out;
}

double weak_star_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const TestFunctionFamily& family, std::size_t truncation) {
    if (!mu.same_partition(nu)) throw IncompatibilityError("measures on different partitions");
    if (truncation == 0) throw ArgumentError("truncation must be >= 1");
    if (truncation > family.size())
        throw ArgumentError("truncation exceeds family size");
    std::vector<double> sig_a(truncation), sig_b(truncation), w(truncation);
    for (std::size_t i = 0; i < truncation; ++i) {
        sig_a[i] = integrate(i + 1, mu, family);
        sig_b[i] = integrate(i + 1, nu, family);
        w[i] = TestFunctionFamily::series_weight(i + 1);
    }
    return kernels::active().weighted_l1(sig_a.data(), sig_b.data(), w.data(), truncation);
}

}  // namespace srblab
