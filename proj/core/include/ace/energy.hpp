#pragma once

#include <optional>

#include "ace/curvature.hpp"
#include "ace/diffops.hpp"
#include "ace/field.hpp"

namespace ace {

/// Weights of the ACE energy
///   E(u) = sum_p (alpha + beta K_p^2) |grad u|_p * voxel_measure
///        + lambda |sum u (c1 - r)^2| + lambda |sum (1-u)(c2 - r)^2|.
/// Defaults: c1 = 1, c2 = 0, lambda = 1, alpha = 0.001. beta = 0 gives the
/// plain length + region (AC) energy.
struct EnergyParams {
    double alpha = 0.001;
    double beta = 2.0;
    double lambda = 1.0;
    double c1 = 1.0;
    double c2 = 0.0;
    CurvatureMode mode = CurvatureMode::Mean2D;
    NumericConfig cfg;
};

/// Throws std::invalid_argument on negative/non-finite weights, lambda <= 0,
/// or a curvature mode that does not match `geometry`.
void validate(const EnergyParams& params, const Geometry& geometry);

struct EnergyBreakdown {
    double elastica = 0.0;
    double region_in = 0.0;
    double region_out = 0.0;
    /// elastica + lambda * region_in + lambda * region_out
    double total = 0.0;
};

struct RegionTerms {
    double inside = 0.0;
    double outside = 0.0;
};

struct RegionMeans {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// (|sum u (c1-r)^2|, |sum (1-u)(c2-r)^2|), unweighted by lambda or voxel measure.
RegionTerms region_terms(const SoftMask& u, const ScalarField& r, double c1, double c2);

/// voxel_measure * sum_p (alpha + beta K_p^2) |grad u|_p, with K from params.mode.
/// For beta == 0 this is exactly alpha * tv_length(u).
double elastica_term(const SoftMask& u, const EnergyParams& params);

EnergyBreakdown ace_energy(const SoftMask& u, const ScalarField& r, const EnergyParams& params);

/// Soft region means c1 = sum(u f)/sum(u), c2 = sum((1-u) f)/sum(1-u).
/// std::nullopt when either weight sum is zero (all-foreground or
/// all-background mask).
std::optional<RegionMeans> estimate_region_means(const SoftMask& u, const ScalarField& f);

} // namespace ace
