#include "ace/diffops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ace/stencil.hpp"
#include "kernels.hpp"

namespace ace {

void validate(const NumericConfig& cfg) {
    if (!(cfg.eps > 0.0) || !std::isfinite(cfg.eps)) throw std::invalid_argument("numeric config: eps must be > 0");
}

namespace detail {

void require_axis(const Geometry& g, std::size_t axis) {
    if (axis >= g.ndim()) {
        throw std::invalid_argument("axis " + std::to_string(axis) + " out of range for " +
                                    std::to_string(g.ndim()) + "D field");
    }
    if (g.extent(axis) < 3) {
        throw std::invalid_argument("axis " + std::to_string(axis) + " has extent " +
                                    std::to_string(g.extent(axis)) + "; stencils need >= 3");
    }
}

void require_all_axes(const Geometry& g) {
    for (std::size_t a = 0; a < g.ndim(); ++a) require_axis(g, a);
}

void grad_mag(const Geometry& g, std::span<const double> u, double eps, std::span<double> out,
              std::array<std::vector<double>, 3>* first_derivs) {
    const std::size_t n = g.size();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = eps * eps;
    for (std::size_t a = 0; a < g.ndim(); ++a) {
        stencil::d1(g, u, d, a);
        for (std::size_t i = 0; i < n; ++i) out[i] += d[i] * d[i];
        if (first_derivs) (*first_derivs)[a] = d;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(out[i]);
}

} // namespace detail

ScalarField deriv1(const ScalarField& u, std::size_t axis) {
    detail::require_axis(u.geometry(), axis);
    std::vector<double> out(u.size());
    stencil::d1(u.geometry(), u.values(), out, axis);
    return u.with_values(std::move(out));
}

ScalarField deriv2(const ScalarField& u, std::size_t axis) {
    detail::require_axis(u.geometry(), axis);
    std::vector<double> out(u.size());
    stencil::d2(u.geometry(), u.values(), out, axis);
    return u.with_values(std::move(out));
}

ScalarField deriv_mixed(const ScalarField& u, std::size_t axis_a, std::size_t axis_b) {
    if (axis_a == axis_b) throw std::invalid_argument("deriv_mixed: axes must differ");
    detail::require_axis(u.geometry(), axis_a);
    detail::require_axis(u.geometry(), axis_b);
    std::vector<double> out(u.size());
    stencil::mixed(u.geometry(), u.values(), out, axis_a, axis_b);
    return u.with_values(std::move(out));
}

ScalarField grad_mag(const ScalarField& u, const NumericConfig& cfg) {
    validate(cfg);
    detail::require_all_axes(u.geometry());
    std::vector<double> out(u.size());
    detail::grad_mag(u.geometry(), u.values(), cfg.eps, out, nullptr);
    return u.with_values(std::move(out));
}

double tv_length(const ScalarField& u, const NumericConfig& cfg) {
    const ScalarField g = grad_mag(u, cfg);
    long double sum = 0.0L;
    for (double v : g.values()) sum += v;
    return static_cast<double>(static_cast<long double>(u.geometry().voxel_measure()) * sum);
}

} // namespace ace
