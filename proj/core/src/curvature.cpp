#include "ace/curvature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ace/stencil.hpp"
#include "kernels.hpp"

namespace ace {

std::size_t mode_ndim(CurvatureMode mode) { return mode == CurvatureMode::Mean2D ? 2 : 3; }

std::string to_string(CurvatureMode mode) {
    switch (mode) {
    case CurvatureMode::Mean2D: return "mean2d";
    case CurvatureMode::Mean3D: return "mean3d";
    case CurvatureMode::Fast3D: return "fast3d";
    case CurvatureMode::Laplacian3D: return "lap3d";
    }
    return "unknown";
}

CurvatureMode parse_curvature_mode(std::string_view name) {
    if (name == "mean2d") return CurvatureMode::Mean2D;
    if (name == "mean3d") return CurvatureMode::Mean3D;
    if (name == "fast3d") return CurvatureMode::Fast3D;
    if (name == "lap3d" || name == "laplacian3d") return CurvatureMode::Laplacian3D;
    throw std::invalid_argument("unknown curvature mode '" + std::string(name) + "'");
}

namespace detail {

void require_mode(CurvatureMode mode, const Geometry& g) {
    if (mode_ndim(mode) != g.ndim()) {
        throw std::invalid_argument("curvature mode " + to_string(mode) + " needs a " +
                                    std::to_string(mode_ndim(mode)) + "D field, got " + std::to_string(g.ndim()) +
                                    "D");
    }
    require_all_axes(g);
}

namespace {

bool is_mean(CurvatureMode mode) { return mode == CurvatureMode::Mean2D || mode == CurvatureMode::Mean3D; }

// Mean-curvature modes share K = scale * chi * Q^{-power}, Q = 1 + |grad u|^2.
struct MeanForm {
    double scale;
    double power;
};

MeanForm mean_form(CurvatureMode mode) {
    return mode == CurvatureMode::Mean2D ? MeanForm{0.5, 1.5} : MeanForm{1.0, 0.5};
}

double q_pow(double q, double power) {
    // 1.5 and 0.5 are the only powers used; avoid std::pow on the hot path.
    const double s = std::sqrt(q);
    return power == 0.5 ? s : q * s;
}

} // namespace

void curvature_forward(CurvatureMode mode, const Geometry& g, std::span<const double> u, DerivTape& tape,
                       std::span<double> curvature) {
    const std::size_t n = g.size();
    const std::size_t nd = g.ndim();

    for (std::size_t a = 0; a < nd; ++a) {
        tape.second[a].resize(n);
        stencil::d2(g, u, tape.second[a], a);
    }

    if (!is_mean(mode)) {
        const auto& h = tape.second;
        if (mode == CurvatureMode::Fast3D) {
            for (std::size_t i = 0; i < n; ++i) curvature[i] = h[0][i] * h[0][i] + h[1][i] * h[1][i] + h[2][i] * h[2][i];
        } else {
            for (std::size_t i = 0; i < n; ++i) curvature[i] = h[0][i] + h[1][i] + h[2][i];
        }
        return;
    }

    for (std::size_t a = 0; a < nd; ++a) {
        if (tape.first[a].size() != n) {
            tape.first[a].resize(n);
            stencil::d1(g, u, tape.first[a], a);
        }
    }
    // d1(d1(u,lo),hi) reusing the stored first derivative; bit-identical to stencil::mixed.
    for (std::size_t lo = 0; lo < nd; ++lo) {
        for (std::size_t hi = lo + 1; hi < nd; ++hi) {
            auto& m = tape.mixed[pair_index(lo, hi)];
            m.resize(n);
            stencil::d1(g, tape.first[lo], m, hi);
        }
    }

    const MeanForm form = mean_form(mode);
    const auto& gx = tape.first;
    const auto& h = tape.second;
    const auto& m = tape.mixed;
    for (std::size_t i = 0; i < n; ++i) {
        double sq[3] = {0.0, 0.0, 0.0};
        double total_sq = 0.0;
        for (std::size_t a = 0; a < nd; ++a) {
            sq[a] = gx[a][i] * gx[a][i];
            total_sq += sq[a];
        }
        double chi = 0.0;
        for (std::size_t a = 0; a < nd; ++a) chi += h[a][i] * (1.0 + total_sq - sq[a]);
        double cross = 0.0;
        for (std::size_t a = 0; a < nd; ++a) {
            for (std::size_t b = a + 1; b < nd; ++b) cross += gx[a][i] * gx[b][i] * m[pair_index(a, b)][i];
        }
        chi -= 2.0 * cross;
        curvature[i] = form.scale * chi / q_pow(1.0 + total_sq, form.power);
    }
}

void curvature_backward(CurvatureMode mode, const Geometry& g, const DerivTape& tape,
                        std::span<const double> bar_curvature, std::array<std::vector<double>, 3>& bar_first,
                        std::span<double> grad_u) {
    const std::size_t n = g.size();
    const std::size_t nd = g.ndim();
    const auto& h = tape.second;
    std::vector<double> bar(n);

    if (!is_mean(mode)) {
        for (std::size_t a = 0; a < nd; ++a) {
            if (mode == CurvatureMode::Fast3D) {
                for (std::size_t i = 0; i < n; ++i) bar[i] = 2.0 * h[a][i] * bar_curvature[i];
            } else {
                for (std::size_t i = 0; i < n; ++i) bar[i] = bar_curvature[i];
            }
            stencil::d2_adjoint_add(g, bar, grad_u, a);
        }
        return;
    }

    const MeanForm form = mean_form(mode);
    const auto& gx = tape.first;
    const auto& m = tape.mixed;
    std::array<std::vector<double>, 3> bar_h;
    std::array<std::vector<double>, 3> bar_m;
    for (std::size_t a = 0; a < nd; ++a) {
        bar_h[a].assign(n, 0.0);
        bar_m[a].assign(n, 0.0);
        if (bar_first[a].size() != n) bar_first[a].assign(n, 0.0);
    }

    for (std::size_t i = 0; i < n; ++i) {
        double sq[3] = {0.0, 0.0, 0.0};
        double total_sq = 0.0;
        for (std::size_t a = 0; a < nd; ++a) {
            sq[a] = gx[a][i] * gx[a][i];
            total_sq += sq[a];
        }
        double chi = 0.0;
        for (std::size_t a = 0; a < nd; ++a) chi += h[a][i] * (1.0 + total_sq - sq[a]);
        double cross = 0.0;
        for (std::size_t a = 0; a < nd; ++a) {
            for (std::size_t b = a + 1; b < nd; ++b) cross += gx[a][i] * gx[b][i] * m[pair_index(a, b)][i];
        }
        chi -= 2.0 * cross;

        const double q = 1.0 + total_sq;
        const double inv_qp = 1.0 / q_pow(q, form.power);
        const double bar_chi = bar_curvature[i] * form.scale * inv_qp;
        const double bar_q = -bar_curvature[i] * form.scale * form.power * chi * inv_qp / q;

        double sum_h = 0.0;
        for (std::size_t a = 0; a < nd; ++a) sum_h += h[a][i];

        for (std::size_t a = 0; a < nd; ++a) bar_h[a][i] = bar_chi * (1.0 + total_sq - sq[a]);
        for (std::size_t a = 0; a < nd; ++a) {
            for (std::size_t b = a + 1; b < nd; ++b) {
                bar_m[pair_index(a, b)][i] = -2.0 * bar_chi * gx[a][i] * gx[b][i];
            }
        }
        for (std::size_t c = 0; c < nd; ++c) {
            double cross_c = 0.0;
            for (std::size_t b = 0; b < nd; ++b) {
                if (b != c) cross_c += gx[b][i] * m[pair_index(b, c)][i];
            }
            const double d_chi = 2.0 * gx[c][i] * (sum_h - h[c][i]) - 2.0 * cross_c;
            bar_first[c][i] += bar_chi * d_chi + bar_q * 2.0 * gx[c][i];
        }
    }

    for (std::size_t a = 0; a < nd; ++a) stencil::d2_adjoint_add(g, bar_h[a], grad_u, a);
    for (std::size_t lo = 0; lo < nd; ++lo) {
        for (std::size_t hi = lo + 1; hi < nd; ++hi) {
            stencil::mixed_adjoint_add(g, bar_m[pair_index(lo, hi)], grad_u, lo, hi);
        }
    }
}

} // namespace detail

ScalarField curvature(const ScalarField& u, CurvatureMode mode) {
    detail::require_mode(mode, u.geometry());
    detail::DerivTape tape;
    std::vector<double> out(u.size());
    detail::curvature_forward(mode, u.geometry(), u.values(), tape, out);
    return u.with_values(std::move(out));
}

ScalarField mean_curvature_2d(const ScalarField& u) { return curvature(u, CurvatureMode::Mean2D); }
ScalarField mean_curvature_3d(const ScalarField& u) { return curvature(u, CurvatureMode::Mean3D); }
ScalarField fast_curvature_3d(const ScalarField& u) { return curvature(u, CurvatureMode::Fast3D); }
ScalarField laplacian_3d(const ScalarField& u) { return curvature(u, CurvatureMode::Laplacian3D); }

} // namespace ace
