#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "ace/field.hpp"

namespace ace {

/// Synthetic segmentation problem: image intensities in [0,1] and a binary
/// ground truth of the same shape.
struct SynthCase {
    ScalarField image;
    ScalarField ground_truth;
    std::string descriptor;
};

/// Intensities used by broken_tube_case.
inline constexpr double kTubeForeground = 0.8;
inline constexpr double kTubeBackground = 0.2;

// Noise is i.i.d. Gaussian: voxel at flat offset i receives
// noise_sigma * random::gaussian(seed, i), then the image is clamped to [0,1].

/// Disk of `radius` voxels around `center` (row, col) in a 2D grid; voxel
/// (j, i) is foreground when (j-cy)^2 + (i-cx)^2 <= radius^2. Requires
/// radius > 2, fg != bg, and the disk fully inside the grid.
SynthCase disk_case(std::span<const std::size_t> shape, std::array<double, 2> center, double radius, double fg,
                    double bg, double noise_sigma, std::uint64_t seed);

/// Horizontal tube of `width` rows, vertically centred, spanning columns
/// [W/8, W - W/8). The ground truth is the full tube; the image erases
/// `gap_count` evenly spaced gaps of `gap_len` columns each.
SynthCase broken_tube_case(std::span<const std::size_t> shape, std::size_t width, std::size_t gap_count,
                           std::size_t gap_len, double noise_sigma, std::uint64_t seed);

/// Fraction of the radius at which the hemisphere graph switches to its
/// radial tangent extension.
inline constexpr double kHemisphereRim = 0.8;

/// Upper hemisphere graph u = sqrt(r^2 - rho^2) about the grid centre
/// ((H-1)/2, (W-1)/2), continued beyond rho = 0.8 r by its radial tangent
/// line so values and slopes stay finite. The rim must lie inside the grid.
ScalarField hemisphere_field(std::span<const std::size_t> shape, double radius);

/// 3D analogue of disk_case; center is (slice, row, col).
SynthCase sphere_case_3d(std::span<const std::size_t> shape, std::array<double, 3> center, double radius, double fg,
                         double bg, double noise_sigma, std::uint64_t seed);

} // namespace ace
