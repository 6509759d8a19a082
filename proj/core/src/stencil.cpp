#include "ace/stencil.hpp"

#include <algorithm>
#include <vector>

#include "stencil_loops.hpp"

namespace ace::stencil {

using detail::for_each_line;

void d1(const Geometry& g, std::span<const double> u, std::span<double> out, std::size_t axis) {
    const double c = 1.0 / (2.0 * g.spacing(axis));
    for_each_line(g, axis, [&](std::size_t m, std::size_t i, std::size_t p, std::size_t run) {
        for (std::size_t k = 0; k < run; ++k) out[i + k] = (u[p + k] - u[m + k]) * c;
    });
}

void d1_adjoint_add(const Geometry& g, std::span<const double> w, std::span<double> out, std::size_t axis) {
    const double c = 1.0 / (2.0 * g.spacing(axis));
    for_each_line(g, axis, [&](std::size_t m, std::size_t i, std::size_t p, std::size_t run) {
        for (std::size_t k = 0; k < run; ++k) {
            const double wc = w[i + k] * c;
            out[p + k] += wc;
            out[m + k] -= wc;
        }
    });
}

void d2(const Geometry& g, std::span<const double> u, std::span<double> out, std::size_t axis) {
    const double h = g.spacing(axis);
    const double c = 1.0 / (h * h);
    for_each_line(g, axis, [&](std::size_t m, std::size_t i, std::size_t p, std::size_t run) {
        for (std::size_t k = 0; k < run; ++k) out[i + k] = (u[p + k] - 2.0 * u[i + k] + u[m + k]) * c;
    });
}

void d2_adjoint_add(const Geometry& g, std::span<const double> w, std::span<double> out, std::size_t axis) {
    const double h = g.spacing(axis);
    const double c = 1.0 / (h * h);
    for_each_line(g, axis, [&](std::size_t m, std::size_t i, std::size_t p, std::size_t run) {
        for (std::size_t k = 0; k < run; ++k) {
            const double wc = w[i + k] * c;
            out[p + k] += wc;
            out[i + k] -= 2.0 * wc;
            out[m + k] += wc;
        }
    });
}

void mixed(const Geometry& g, std::span<const double> u, std::span<double> out, std::size_t a, std::size_t b) {
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    std::vector<double> tmp(g.size());
    d1(g, u, tmp, lo);
    d1(g, tmp, out, hi);
}

void mixed_adjoint_add(const Geometry& g, std::span<const double> w, std::span<double> out, std::size_t a,
                       std::size_t b) {
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    std::vector<double> tmp(g.size(), 0.0);
    d1_adjoint_add(g, w, tmp, hi);
    d1_adjoint_add(g, tmp, out, lo);
}

} // namespace ace::stencil
