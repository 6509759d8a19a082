#pragma once

#include <string>
#include <string_view>

#include "ace/field.hpp"

namespace ace {

/// Curvature estimator used by the elastica term.
///   Mean2D       graph mean curvature of a 2D field.
///   Mean3D       Monge-patch form chi / sqrt(1 + |grad u|^2) for 3D fields.
///   Fast3D       u_xx^2 + u_yy^2 + u_zz^2 (three unmixed second-derivative kernels).
///   Laplacian3D  u_xx + u_yy + u_zz; comparison variant, not part of the ACE loss.
enum class CurvatureMode { Mean2D, Mean3D, Fast3D, Laplacian3D };

/// Number of dimensions the mode applies to (2 or 3).
std::size_t mode_ndim(CurvatureMode mode);
std::string to_string(CurvatureMode mode);
/// Accepts "mean2d", "mean3d", "fast3d", "lap3d" (also "laplacian3d").
CurvatureMode parse_curvature_mode(std::string_view name);

/// [(1+u_x^2) u_yy + (1+u_y^2) u_xx - 2 u_x u_y u_xy] / [2 (1+u_x^2+u_y^2)^{3/2}]
ScalarField mean_curvature_2d(const ScalarField& u);

/// chi / sqrt(1 + u_x^2 + u_y^2 + u_z^2) with
/// chi = u_xx(1+u_y^2+u_z^2) + u_yy(1+u_x^2+u_z^2) + u_zz(1+u_x^2+u_y^2)
///       - 2(u_x u_y u_xy + u_x u_z u_xz + u_y u_z u_yz).
/// Note there is no 3(1+|grad u|^2)^{3/2} normalization: on u = (x^2+y^2+z^2)/2
/// at the origin this returns 3.
ScalarField mean_curvature_3d(const ScalarField& u);

/// u_xx^2 + u_yy^2 + u_zz^2. Nonnegative.
ScalarField fast_curvature_3d(const ScalarField& u);

/// u_xx + u_yy + u_zz.
ScalarField laplacian_3d(const ScalarField& u);

/// Dispatch on mode; throws std::invalid_argument when the mode does not match u's dimension.
ScalarField curvature(const ScalarField& u, CurvatureMode mode);

} // namespace ace
