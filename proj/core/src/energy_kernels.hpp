#pragma once

#include <span>

#include "ace/energy.hpp"

namespace ace::detail {

/// Raw sums behind one energy evaluation, accumulated sequentially in flat
/// offset order in extended precision.
struct EnergySums {
    long double tv = 0.0L;         // sum |grad u|
    long double curvature = 0.0L;  // sum K^2 |grad u| (0 when beta == 0)
    long double inside = 0.0L;     // signed sum u (c1 - r)^2
    long double outside = 0.0L;    // signed sum (1-u)(c2 - r)^2
};

// No validation: callers check shapes and params.
EnergySums energy_sums(const Geometry& g, std::span<const double> u, std::span<const double> r,
                       const EnergyParams& params);
EnergyBreakdown breakdown(const Geometry& g, const EnergySums& sums, const EnergyParams& params);
EnergyBreakdown evaluate(const Geometry& g, std::span<const double> u, std::span<const double> r,
                         const EnergyParams& params);

/// Energy total without rounding to double, for finite-difference checks.
long double total_extended(const Geometry& g, std::span<const double> u, std::span<const double> r,
                           const EnergyParams& params);

/// out = dE/du. `out` is overwritten.
void gradient(const Geometry& g, std::span<const double> u, std::span<const double> r, const EnergyParams& params,
              std::span<double> out);

} // namespace ace::detail
