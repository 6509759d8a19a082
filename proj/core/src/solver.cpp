#include "ace/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "energy_kernels.hpp"

namespace ace {

void validate(const SolverConfig& cfg) {
    if (!(cfg.step_size > 0.0) || !std::isfinite(cfg.step_size)) throw std::invalid_argument("solver: step_size must be > 0");
    if (!(cfg.momentum >= 0.0 && cfg.momentum < 1.0)) throw std::invalid_argument("solver: momentum must be in [0,1)");
    if (!(cfg.stop_tol >= 0.0)) throw std::invalid_argument("solver: stop_tol must be >= 0");
}

SolverDiverged::SolverDiverged(std::size_t iteration, SolverTrace partial)
    : std::runtime_error("solver: non-finite energy at iteration " + std::to_string(iteration)),
      iteration_(iteration), trace_(std::move(partial)) {}

namespace {

constexpr std::size_t kStopWindow = 10;
constexpr double kLogitClip = 1e-6;

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

RegionMeans region_means(std::span<const double> u, std::span<const double> f, RegionMeans previous) {
    long double w_in = 0.0L, w_out = 0.0L, s_in = 0.0L, s_out = 0.0L;
    for (std::size_t i = 0; i < u.size(); ++i) {
        w_in += u[i];
        w_out += 1.0 - u[i];
        s_in += u[i] * f[i];
        s_out += (1.0 - u[i]) * f[i];
    }
    if (w_in <= 0.0L || w_out <= 0.0L) return previous;
    const RegionMeans est{static_cast<double>(s_in / w_in), static_cast<double>(s_out / w_out)};
    if (est.c1 == est.c2) return previous;
    return est;
}

} // namespace

SegmentResult segment(const ScalarField& image, const SoftMask& init, const EnergyParams& params,
                      const SolverConfig& cfg) {
    if (!image.geometry().same_shape(init.geometry())) throw std::invalid_argument("segment: image and init shapes differ");
    validate(params, image.geometry());
    validate(cfg);

    SegmentResult result{init, {}};
    if (cfg.max_iters == 0) return result;

    const Geometry& g = init.geometry();
    const std::size_t n = g.size();
    const bool logistic_mode = cfg.parameterization == Parameterization::Logistic;

    // `x` is the optimized variable: the mask itself, or its logit.
    std::vector<double> u(init.values().begin(), init.values().end());
    std::vector<double> x(n);
    if (logistic_mode) {
        for (std::size_t i = 0; i < n; ++i) {
            const double p = std::clamp(u[i], kLogitClip, 1.0 - kLogitClip);
            x[i] = std::log(p / (1.0 - p));
            u[i] = logistic(x[i]);
        }
    } else {
        x = u;
    }
    std::vector<double> grad(n);
    std::vector<double> velocity(n, 0.0);

    EnergyParams p = params;
    RegionMeans constants{params.c1, params.c2};
    SolverTrace& trace = result.trace;

    for (std::size_t t = 0; t < cfg.max_iters; ++t) {
        if (cfg.region_mode == RegionMode::CvMeans) constants = region_means(u, image.values(), constants);
        p.c1 = constants.c1;
        p.c2 = constants.c2;

        const EnergyBreakdown e = detail::evaluate(g, u, image.values(), p);
        if (!std::isfinite(e.total)) {
            trace.iterations_run = t;
            throw SolverDiverged(t, trace);
        }
        trace.energies.push_back(e);
        trace.constants.push_back(constants);
        trace.iterations_run = t + 1;

        detail::gradient(g, u, image.values(), p, grad);
        if (logistic_mode) {
            for (std::size_t i = 0; i < n; ++i) grad[i] *= u[i] * (1.0 - u[i]);
        }
        if (cfg.optimizer == Optimizer::Momentum) {
            for (std::size_t i = 0; i < n; ++i) {
                velocity[i] = cfg.momentum * velocity[i] - cfg.step_size * grad[i];
                x[i] += velocity[i];
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) x[i] -= cfg.step_size * grad[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (logistic_mode) {
                u[i] = logistic(x[i]);
            } else {
                x[i] = std::clamp(x[i], 0.0, 1.0);
                u[i] = x[i];
            }
        }

        if (t >= kStopWindow) {
            const double before = trace.energies[t - kStopWindow].total;
            if (std::fabs(before - e.total) <= cfg.stop_tol * std::fabs(before)) {
                trace.converged = true;
                break;
            }
        }
    }

    for (double v : u) {
        if (!std::isfinite(v)) throw SolverDiverged(trace.iterations_run, trace);
    }
    result.mask = SoftMask(init.field().with_values(std::move(u)));
    return result;
}

ScalarField threshold(const ScalarField& mask, double t) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("threshold: t must be in (0,1)");
    std::vector<double> out(mask.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask[i] >= t ? 1.0 : 0.0;
    return mask.with_values(std::move(out));
}

} // namespace ace
