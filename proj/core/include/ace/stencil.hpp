#pragma once

// Raw finite-difference kernels on contiguous buffers, with replicate
// (nearest-edge) boundary handling. Callers guarantee buffer sizes match the
// geometry and that the differentiated axis has extent >= 3.
//
// Every forward kernel has an `_adjoint_add` twin that accumulates the exact
// transpose: out += S^T w. The adjoints are written as scatters of the forward
// stencil, so boundary rows are transposed along with interior ones.

#include <cstddef>
#include <span>

#include "ace/field.hpp"

namespace ace::stencil {

/// out = (u[i+1] - u[i-1]) / (2h) along `axis`.
void d1(const Geometry& g, std::span<const double> u, std::span<double> out, std::size_t axis);
void d1_adjoint_add(const Geometry& g, std::span<const double> w, std::span<double> out, std::size_t axis);

/// out = (u[i+1] - 2u[i] + u[i-1]) / h^2 along `axis`.
void d2(const Geometry& g, std::span<const double> u, std::span<double> out, std::size_t axis);
void d2_adjoint_add(const Geometry& g, std::span<const double> w, std::span<double> out, std::size_t axis);

/// out = d1(d1(u, lo), hi) with lo < hi; the axis order is canonicalized so
/// mixed(u, a, b) and mixed(u, b, a) are bit-identical.
void mixed(const Geometry& g, std::span<const double> u, std::span<double> out, std::size_t a, std::size_t b);
void mixed_adjoint_add(const Geometry& g, std::span<const double> w, std::span<double> out, std::size_t a,
                       std::size_t b);

} // namespace ace::stencil
