#include "ace/random.hpp"

#include <cmath>
#include <numbers>

namespace ace::random {

double gaussian(std::uint64_t seed, std::uint64_t index) {
    const double u1 = uniform(seed, 2 * index);
    const double u2 = uniform(seed, 2 * index + 1);
    // 1 - u1 lies in (0,1], so the log is finite.
    return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace ace::random
