#include "srblab/rng.hpp"

namespace srblab {

namespace rng {

std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace rng

Point lebesgue_point(const DomainDescriptor& domain, std::uint64_t seed, std::uint64_t index) {
    Point p{};
    for (int k = 0; k < domain.dim; ++k) {
        const double u = rng::draw_unit(seed, index * static_cast<std::uint64_t>(domain.dim) +
                                                  static_cast<std::uint64_t>(k));
        p[k] = domain.lo[k] + u * domain.length(k);
    }
    return p;
}

std::vector<Point> lebesgue_points(const DomainDescriptor& domain, std::uint64_t seed,
                                   std::size_t count) {
    std::vector<Point> pts;
    pts.reserve(count);
    for (std::size_t j = 0; j < count; ++j) pts.push_back(lebesgue_point(domain, seed, j));
    return pts;
}

}  // namespace srblab
