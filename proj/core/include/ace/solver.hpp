#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ace/energy.hpp"
#include "ace/field.hpp"

namespace ace {

enum class Optimizer { GradientDescent, Momentum };
enum class Parameterization { DirectClipped, Logistic };
enum class RegionMode { FixedConstants, CvMeans };

struct SolverConfig {
    std::size_t max_iters = 500;
    double step_size = 0.1;
    Optimizer optimizer = Optimizer::GradientDescent;
    double momentum = 0.9;
    Parameterization parameterization = Parameterization::DirectClipped;
    RegionMode region_mode = RegionMode::FixedConstants;
    /// Stop when |E[t-10] - E[t]| <= stop_tol * |E[t-10]|.
    double stop_tol = 1e-7;
    /// Recorded for reproducibility; the solver itself draws no random numbers.
    std::uint64_t seed = 0;
};

void validate(const SolverConfig& cfg);

struct SolverTrace {
    /// Energy of the iterate at the start of each iteration, under the region
    /// constants used for that iteration's step.
    std::vector<EnergyBreakdown> energies;
    std::vector<RegionMeans> constants;
    std::size_t iterations_run = 0;
    bool converged = false;
};

struct SegmentResult {
    SoftMask mask;
    SolverTrace trace;
};

/// Thrown when an energy evaluation is NaN/Inf. Carries the trace up to the
/// failing iteration.
class SolverDiverged : public std::runtime_error {
public:
    SolverDiverged(std::size_t iteration, SolverTrace partial);
    std::size_t iteration() const { return iteration_; }
    const SolverTrace& partial_trace() const { return trace_; }

private:
    std::size_t iteration_;
    SolverTrace trace_;
};

/// Minimizes the ACE energy over a soft mask with the image as reference
/// field. Plain gradient steps use the per-voxel partial derivatives
/// dE/du[p] directly (they do not grow with grid size).
///
/// In CvMeans mode c1/c2 are re-estimated from the current mask before every
/// step. The previous constants are kept when the mask is all-foreground,
/// all-background, or yields c1 == c2 (e.g. a uniform initial mask); the
/// first fallback values are params.c1/params.c2.
SegmentResult segment(const ScalarField& image, const SoftMask& init, const EnergyParams& params,
                      const SolverConfig& cfg);

/// Binary field: 1 where mask >= t. Requires t in (0,1).
ScalarField threshold(const ScalarField& mask, double t = 0.5);

} // namespace ace
