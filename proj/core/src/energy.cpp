#include "ace/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "energy_kernels.hpp"
#include "kernels.hpp"

namespace ace {

void validate(const EnergyParams& params, const Geometry& geometry) {
    auto nonneg = [](double v) { return v >= 0.0 && std::isfinite(v); };
    if (!nonneg(params.alpha)) throw std::invalid_argument("energy: alpha must be >= 0");
    if (!nonneg(params.beta)) throw std::invalid_argument("energy: beta must be >= 0");
    if (!(params.lambda > 0.0) || !std::isfinite(params.lambda)) throw std::invalid_argument("energy: lambda must be > 0");
    if (!std::isfinite(params.c1) || !std::isfinite(params.c2)) throw std::invalid_argument("energy: c1/c2 must be finite");
    validate(params.cfg);
    detail::require_mode(params.mode, geometry);
}

namespace detail {

namespace {

void require_same_shape(const Geometry& a, const Geometry& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("energy: mask and reference shapes differ");
}

} // namespace

EnergySums energy_sums(const Geometry& g, std::span<const double> u, std::span<const double> r,
                       const EnergyParams& params) {
    const std::size_t n = g.size();
    EnergySums sums;

    DerivTape tape;
    std::vector<double> mag(n);
    grad_mag(g, u, params.cfg.eps, mag, &tape.first);
    for (std::size_t i = 0; i < n; ++i) sums.tv += mag[i];

    if (params.beta != 0.0) {
        std::vector<double> k(n);
        curvature_forward(params.mode, g, u, tape, k);
        for (std::size_t i = 0; i < n; ++i) sums.curvature += k[i] * k[i] * mag[i];
    }

    for (std::size_t i = 0; i < n; ++i) {
        const double din = params.c1 - r[i];
        const double dout = params.c2 - r[i];
        sums.inside += u[i] * (din * din);
        sums.outside += (1.0 - u[i]) * (dout * dout);
    }
    return sums;
}

long double total_extended(const Geometry& g, std::span<const double> u, std::span<const double> r,
                           const EnergyParams& params) {
    const EnergySums s = energy_sums(g, u, r, params);
    const long double m = g.voxel_measure();
    return static_cast<long double>(params.alpha) * m * s.tv + static_cast<long double>(params.beta) * m * s.curvature +
           static_cast<long double>(params.lambda) * std::fabs(s.inside) +
           static_cast<long double>(params.lambda) * std::fabs(s.outside);
}

EnergyBreakdown breakdown(const Geometry& g, const EnergySums& s, const EnergyParams& params) {
    const long double m = g.voxel_measure();
    const double tv = static_cast<double>(m * s.tv);
    EnergyBreakdown e;
    e.elastica = params.alpha * tv + params.beta * static_cast<double>(m * s.curvature);
    e.region_in = static_cast<double>(std::fabs(s.inside));
    e.region_out = static_cast<double>(std::fabs(s.outside));
    e.total = e.elastica + params.lambda * e.region_in + params.lambda * e.region_out;
    return e;
}

EnergyBreakdown evaluate(const Geometry& g, std::span<const double> u, std::span<const double> r,
                         const EnergyParams& params) {
    return breakdown(g, energy_sums(g, u, r, params), params);
}

} // namespace detail

RegionTerms region_terms(const SoftMask& u, const ScalarField& r, double c1, double c2) {
    detail::require_same_shape(u.geometry(), r.geometry());
    long double in = 0.0L;
    long double out = 0.0L;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double din = c1 - r[i];
        const double dout = c2 - r[i];
        in += u[i] * (din * din);
        out += (1.0 - u[i]) * (dout * dout);
    }
    return {static_cast<double>(std::fabs(in)), static_cast<double>(std::fabs(out))};
}

double elastica_term(const SoftMask& u, const EnergyParams& params) {
    validate(params, u.geometry());
    // The region part is evaluated against u itself and discarded.
    return detail::evaluate(u.geometry(), u.values(), u.values(), params).elastica;
}

EnergyBreakdown ace_energy(const SoftMask& u, const ScalarField& r, const EnergyParams& params) {
    detail::require_same_shape(u.geometry(), r.geometry());
    validate(params, u.geometry());
    return detail::evaluate(u.geometry(), u.values(), r.values(), params);
}

std::optional<RegionMeans> estimate_region_means(const SoftMask& u, const ScalarField& f) {
    detail::require_same_shape(u.geometry(), f.geometry());
    long double w_in = 0.0L, w_out = 0.0L, s_in = 0.0L, s_out = 0.0L;
    for (std::size_t i = 0; i < u.size(); ++i) {
        w_in += u[i];
        w_out += 1.0 - u[i];
        s_in += u[i] * f[i];
        s_out += (1.0 - u[i]) * f[i];
    }
    if (w_in <= 0.0L || w_out <= 0.0L) return std::nullopt;
    return RegionMeans{static_cast<double>(s_in / w_in), static_cast<double>(s_out / w_out)};
}

} // namespace ace
