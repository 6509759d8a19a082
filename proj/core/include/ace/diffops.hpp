#pragma once

#include <cstddef>

#include "ace/field.hpp"

namespace ace {

/// Smoothing for |grad u|: the magnitude is evaluated as sqrt(|g|^2 + eps^2)
/// so it is differentiable at zero gradient.
struct NumericConfig {
    double eps = 1e-6;
};

void validate(const NumericConfig& cfg);

// Central differences with replicate padding. Each operator requires
// extent >= 3 along the differentiated axes and throws std::invalid_argument
// otherwise (or when an axis is out of range).

ScalarField deriv1(const ScalarField& u, std::size_t axis);
ScalarField deriv2(const ScalarField& u, std::size_t axis);
/// deriv1(deriv1(u, min(a,b)), max(a,b)); symmetric in (a, b) bit-for-bit.
ScalarField deriv_mixed(const ScalarField& u, std::size_t axis_a, std::size_t axis_b);

/// Per-voxel sqrt(sum_a deriv1(u,a)^2 + eps^2).
ScalarField grad_mag(const ScalarField& u, const NumericConfig& cfg = {});

/// Discrete total variation: voxel measure times the sum of grad_mag. The sum
/// runs sequentially in flat offset order with an extended-precision
/// accumulator.
double tv_length(const ScalarField& u, const NumericConfig& cfg = {});

} // namespace ace
