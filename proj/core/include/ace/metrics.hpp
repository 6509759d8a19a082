#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ace/field.hpp"

namespace ace {

/// Raised by hd95 when either mask has no foreground.
class EmptyMaskError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Connectivity {
    Face,  ///< 4-neighbours in 2D, 6 in 3D
    Full,  ///< 8-neighbours in 2D, 26 in 3D
};

struct MetricsReport {
    double dice = 0.0;
    /// Absent when either mask is empty.
    std::optional<double> hd95;
    std::size_t components_pred = 0;
    std::size_t components_gt = 0;
};

/// 2|A n B| / (|A| + |B|); 1 when both masks are empty. Inputs must be binary.
double dice(const ScalarField& a, const ScalarField& b);

/// Foreground voxels with at least one face neighbour that is background or
/// outside the grid. Returned as flat offsets in increasing order.
std::vector<std::size_t> boundary_voxels(const ScalarField& mask);

/// 95th percentile (linear interpolation between order statistics) of the
/// pooled directed boundary distances {d(p, dB) : p in dA} u {d(q, dA) : q in dB},
/// with Euclidean distances between voxel centres scaled by `spacing`.
/// Throws EmptyMaskError if either mask is empty.
double hd95(const ScalarField& a, const ScalarField& b, std::span<const double> spacing);
/// Uses a's grid spacing.
double hd95(const ScalarField& a, const ScalarField& b);

/// Linear-interpolation percentile of an ascending-sorted sample, q in [0,1].
double percentile_sorted(std::span<const double> sorted, double q);

/// Exact squared Euclidean distance (with spacing) from every voxel to the
/// nearest voxel where `feature` is true; +inf when there is none.
std::vector<double> squared_distance_transform(const Geometry& g, const std::vector<bool>& feature,
                                               std::span<const double> spacing);

std::size_t count_components(const ScalarField& mask, Connectivity connectivity = Connectivity::Face);

/// Dice, hd95 and component counts of a binary prediction against a binary ground truth.
MetricsReport evaluate_masks(const ScalarField& pred, const ScalarField& gt);

} // namespace ace
