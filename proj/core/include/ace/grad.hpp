#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ace/energy.hpp"
#include "ace/field.hpp"

namespace ace {

/// Analytic dE/du[p] for every voxel, by reverse accumulation through the
/// stencil chain (adjoint stencils are exact transposes, boundary included).
/// The region part is lambda * [(c1-r)^2 - (c2-r)^2] for masks in [0,1].
ScalarField ace_gradient(const SoftMask& u, const ScalarField& r, const EnergyParams& params);

/// Central finite differences of the energy, one voxel at a time:
/// [E(u + h e_p) - E(u - h e_p)] / (2h). Costs 2 * size() energy evaluations;
/// meant for small grids only. The two energies are differenced before
/// rounding to double.
ScalarField fd_gradient(const SoftMask& u, const ScalarField& r, const EnergyParams& params, double h = 1e-6);

struct GradCheckReport {
    double max_abs_error = 0.0;
    /// Relative error |a - f| / max(|a|, |f|, 1e-8), maximized over voxels and trials.
    double max_rel_error = 0.0;
    std::array<std::size_t, 3> worst_voxel{0, 0, 0};
    std::size_t trials = 0;
    bool passed = false;
};

/// Compares ace_gradient against fd_gradient on `trials` seeded random
/// (u, r) pairs, u and r uniform in [0,1). Passes when max_rel_error < tol.
GradCheckReport gradcheck(std::span<const std::size_t> shape, std::size_t trials, std::uint64_t seed,
                          const EnergyParams& params, double tol = 1e-5);

} // namespace ace
