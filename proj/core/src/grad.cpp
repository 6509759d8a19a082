#include "ace/grad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ace/random.hpp"
#include "ace/stencil.hpp"
#include "energy_kernels.hpp"
#include "kernels.hpp"

namespace ace {

namespace detail {

void gradient(const Geometry& g, std::span<const double> u, std::span<const double> r, const EnergyParams& params,
              std::span<double> out) {
    const std::size_t n = g.size();
    const std::size_t nd = g.ndim();
    const double m = g.voxel_measure();
    std::fill(out.begin(), out.end(), 0.0);

    DerivTape tape;
    std::vector<double> mag(n);
    grad_mag(g, u, params.cfg.eps, mag, &tape.first);

    std::vector<double> k;
    if (params.beta != 0.0) {
        k.resize(n);
        curvature_forward(params.mode, g, u, tape, k);
    }

    // E_el = m * sum (alpha + beta K^2) G.
    //   dE/dG = m (alpha + beta K^2); dG/d(d1_a u) = d1_a u / G
    //   dE/dK = 2 m beta K G
    std::array<std::vector<double>, 3> bar_first;
    for (std::size_t a = 0; a < nd; ++a) {
        bar_first[a].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double weight = params.beta != 0.0 ? params.alpha + params.beta * k[i] * k[i] : params.alpha;
            bar_first[a][i] = m * weight * tape.first[a][i] / mag[i];
        }
    }
    if (params.beta != 0.0) {
        std::vector<double> bar_k(n);
        for (std::size_t i = 0; i < n; ++i) bar_k[i] = 2.0 * m * params.beta * k[i] * mag[i];
        curvature_backward(params.mode, g, tape, bar_k, bar_first, out);
    }
    for (std::size_t a = 0; a < nd; ++a) stencil::d1_adjoint_add(g, bar_first[a], out, a);

    // Region sums sit inside absolute values; the sign is +1 unless the sum
    // is strictly negative (never the case for masks in [0,1]).
    long double in = 0.0L, outside = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const double din = params.c1 - r[i];
        const double dout = params.c2 - r[i];
        in += u[i] * (din * din);
        outside += (1.0 - u[i]) * (dout * dout);
    }
    const double s_in = in < 0.0L ? -1.0 : 1.0;
    const double s_out = outside < 0.0L ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double din = params.c1 - r[i];
        const double dout = params.c2 - r[i];
        out[i] += params.lambda * (s_in * (din * din) - s_out * (dout * dout));
    }
}

} // namespace detail

namespace {

void require_same_shape(const Geometry& a, const Geometry& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("gradient: mask and reference shapes differ");
}

std::vector<double> fd_gradient_raw(const Geometry& g, std::vector<double> u, std::span<const double> r,
                                    const EnergyParams& params, double h) {
    std::vector<double> out(g.size());
    for (std::size_t p = 0; p < g.size(); ++p) {
        const double saved = u[p];
        u[p] = saved + h;
        const long double plus = detail::total_extended(g, u, r, params);
        u[p] = saved - h;
        const long double minus = detail::total_extended(g, u, r, params);
        u[p] = saved;
        // Divide by the actual step so rounding of saved +/- h does not bias the quotient.
        const long double span = static_cast<long double>(saved + h) - static_cast<long double>(saved - h);
        out[p] = static_cast<double>((plus - minus) / span);
    }
    return out;
}

} // namespace

ScalarField ace_gradient(const SoftMask& u, const ScalarField& r, const EnergyParams& params) {
    require_same_shape(u.geometry(), r.geometry());
    validate(params, u.geometry());
    std::vector<double> out(u.size());
    detail::gradient(u.geometry(), u.values(), r.values(), params, out);
    return u.field().with_values(std::move(out));
}

ScalarField fd_gradient(const SoftMask& u, const ScalarField& r, const EnergyParams& params, double h) {
    require_same_shape(u.geometry(), r.geometry());
    validate(params, u.geometry());
    if (!(h > 0.0)) throw std::invalid_argument("fd_gradient: step must be > 0");
    std::vector<double> copy(u.values().begin(), u.values().end());
    return u.field().with_values(fd_gradient_raw(u.geometry(), std::move(copy), r.values(), params, h));
}

GradCheckReport gradcheck(std::span<const std::size_t> shape, std::size_t trials, std::uint64_t seed,
                          const EnergyParams& params, double tol) {
    if (trials == 0) throw std::invalid_argument("gradcheck: trials must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("gradcheck: tolerance must be > 0");
    const Geometry g(shape);
    validate(params, g);

    GradCheckReport report;
    report.trials = trials;
    const std::size_t n = g.size();
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t u_stream = random::substream(seed, 2 * t);
        const std::uint64_t r_stream = random::substream(seed, 2 * t + 1);
        std::vector<double> u(n), r(n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = random::uniform(u_stream, i);
            r[i] = random::uniform(r_stream, i);
        }
        std::vector<double> analytic(n);
        detail::gradient(g, u, r, params, analytic);
        const std::vector<double> numeric = fd_gradient_raw(g, u, r, params, 1e-6);
        for (std::size_t i = 0; i < n; ++i) {
            const double abs_err = std::fabs(analytic[i] - numeric[i]);
            const double denom = std::max({std::fabs(analytic[i]), std::fabs(numeric[i]), 1e-8});
            const double rel_err = abs_err / denom;
            report.max_abs_error = std::max(report.max_abs_error, abs_err);
            if (rel_err > report.max_rel_error) {
                report.max_rel_error = rel_err;
                report.worst_voxel = g.index(i);
            }
        }
    }
    report.passed = report.max_rel_error < tol;
    return report;
}

} // namespace ace
