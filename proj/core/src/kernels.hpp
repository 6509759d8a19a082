#pragma once

// Internal building blocks shared by diffops, curvature, energy and grad.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ace/curvature.hpp"
#include "ace/field.hpp"

namespace ace::detail {

void require_axis(const Geometry& g, std::size_t axis);
void require_all_axes(const Geometry& g);
void require_mode(CurvatureMode mode, const Geometry& g);

/// out = sqrt(sum_a d1(u,a)^2 + eps^2). When `first_derivs` is non-null its
/// first ndim entries receive d1(u,a).
void grad_mag(const Geometry& g, std::span<const double> u, double eps, std::span<double> out,
              std::array<std::vector<double>, 3>* first_derivs);

/// Index of the unordered axis pair {a,b} in a 3-slot array: {0,1}->0, {0,2}->1, {1,2}->2.
constexpr std::size_t pair_index(std::size_t a, std::size_t b) {
    const std::size_t lo = a < b ? a : b;
    const std::size_t hi = a < b ? b : a;
    return lo + hi - 1;
}

/// Derivative fields recorded during a curvature evaluation so the reverse
/// pass can reuse them.
struct DerivTape {
    std::array<std::vector<double>, 3> first;
    std::array<std::vector<double>, 3> second;
    std::array<std::vector<double>, 3> mixed;
};

/// Evaluates the curvature field K for `mode`. For the mean-curvature modes
/// `tape.first` may be pre-filled with d1(u,a); it is computed otherwise.
void curvature_forward(CurvatureMode mode, const Geometry& g, std::span<const double> u, DerivTape& tape,
                       std::span<double> curvature);

/// Reverse pass of curvature_forward. Adjoints with respect to d1(u,a) are
/// added to `bar_first[a]` (the caller applies d1^T); second-order stencil
/// adjoints are applied and accumulated directly into `grad_u`.
void curvature_backward(CurvatureMode mode, const Geometry& g, const DerivTape& tape,
                        std::span<const double> bar_curvature, std::array<std::vector<double>, 3>& bar_first,
                        std::span<double> grad_u);

} // namespace ace::detail
