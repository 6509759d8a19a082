#pragma once

// Test-only reference implementations. They share nothing with the library
// beyond ScalarField storage: every derivative is evaluated point by point
// with explicit clamped indexing, and the metrics are brute force.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ace/field.hpp"

namespace oracle {

using Index = std::array<long, 3>;

inline double value(const ace::ScalarField& u, Index p) {
    const auto& g = u.geometry();
    std::size_t off = 0;
    for (std::size_t a = 0; a < g.ndim(); ++a) {
        const long e = static_cast<long>(g.extent(a));
        const long c = std::clamp(p[a], 0L, e - 1);
        off = off * static_cast<std::size_t>(e) + static_cast<std::size_t>(c);
    }
    return u[off];
}

inline Index shifted(Index p, std::size_t axis, long by) {
    p[axis] += by;
    return p;
}

/// The clamped neighbour along `axis` (replicate padding moves the stencil
/// point onto the edge voxel).
inline Index neighbour(const ace::ScalarField& u, Index p, std::size_t axis, long by) {
    Index q = shifted(p, axis, by);
    q[axis] = std::clamp(q[axis], 0L, static_cast<long>(u.geometry().extent(axis)) - 1);
    return q;
}

inline double d1(const ace::ScalarField& u, Index p, std::size_t a) {
    const double h = u.geometry().spacing(a);
    return (value(u, shifted(p, a, 1)) - value(u, shifted(p, a, -1))) / (2.0 * h);
}

inline double d2(const ace::ScalarField& u, Index p, std::size_t a) {
    const double h = u.geometry().spacing(a);
    return (value(u, shifted(p, a, 1)) - 2.0 * value(u, p) + value(u, shifted(p, a, -1))) / (h * h);
}

/// d/db of (d/da u), each first derivative evaluated with its own clamping.
inline double dmixed(const ace::ScalarField& u, Index p, std::size_t a, std::size_t b) {
    const double h = u.geometry().spacing(b);
    return (d1(u, neighbour(u, p, b, 1), a) - d1(u, neighbour(u, p, b, -1), a)) / (2.0 * h);
}

inline double grad_mag(const ace::ScalarField& u, Index p, double eps) {
    double s = 0.0;
    for (std::size_t a = 0; a < u.ndim(); ++a) s += std::pow(d1(u, p, a), 2);
    return std::sqrt(s + eps * eps);
}

inline double mean2d(const ace::ScalarField& u, Index p) {
    const double ux = d1(u, p, 1), uy = d1(u, p, 0);
    const double uxx = d2(u, p, 1), uyy = d2(u, p, 0), uxy = dmixed(u, p, 0, 1);
    return ((1 + ux * ux) * uyy + (1 + uy * uy) * uxx - 2 * ux * uy * uxy) /
           (2 * std::pow(1 + ux * ux + uy * uy, 1.5));
}

inline double mean3d(const ace::ScalarField& u, Index p) {
    const double ux = d1(u, p, 0), uy = d1(u, p, 1), uz = d1(u, p, 2);
    const double uxx = d2(u, p, 0), uyy = d2(u, p, 1), uzz = d2(u, p, 2);
    const double uxy = dmixed(u, p, 0, 1), uxz = dmixed(u, p, 0, 2), uyz = dmixed(u, p, 1, 2);
    const double chi = uxx * (1 + uy * uy + uz * uz) + uyy * (1 + ux * ux + uz * uz) + uzz * (1 + ux * ux + uy * uy) -
                       2 * (ux * uy * uxy + ux * uz * uxz + uy * uz * uyz);
    return chi / std::sqrt(1 + ux * ux + uy * uy + uz * uz);
}

inline double fast3d(const ace::ScalarField& u, Index p) {
    return std::pow(d2(u, p, 0), 2) + std::pow(d2(u, p, 1), 2) + std::pow(d2(u, p, 2), 2);
}

inline double lap3d(const ace::ScalarField& u, Index p) { return d2(u, p, 0) + d2(u, p, 1) + d2(u, p, 2); }

template <class F>
void for_each_index(const ace::Geometry& g, F&& f) {
    const long nk = g.ndim() == 3 ? static_cast<long>(g.extent(0)) : 1;
    const long nj = static_cast<long>(g.extent(g.ndim() - 2));
    const long ni = static_cast<long>(g.extent(g.ndim() - 1));
    for (long k = 0; k < nk; ++k)
        for (long j = 0; j < nj; ++j)
            for (long i = 0; i < ni; ++i) f(g.ndim() == 3 ? Index{k, j, i} : Index{j, i, 0});
}

enum class Curv { Mean2D, Mean3D, Fast3D, Lap3D };

inline double curvature(Curv c, const ace::ScalarField& u, Index p) {
    switch (c) {
    case Curv::Mean2D: return mean2d(u, p);
    case Curv::Mean3D: return mean3d(u, p);
    case Curv::Fast3D: return fast3d(u, p);
    case Curv::Lap3D: return lap3d(u, p);
    }
    return 0.0;
}

struct Energy {
    double elastica, inside, outside, total;
};

/// Pointwise sum of (alpha + beta K^2)|grad u| times voxel measure plus the
/// two region sums, all in plain double.
inline Energy energy(const ace::ScalarField& u, const ace::ScalarField& r, double alpha, double beta, double lambda,
                     double c1, double c2, Curv c, double eps = 1e-6) {
    double el = 0.0, in = 0.0, out = 0.0;
    for_each_index(u.geometry(), [&](Index p) {
        const double k = curvature(c, u, p);
        el += (alpha + beta * k * k) * grad_mag(u, p, eps);
        const double v = value(u, p), rv = value(r, p);
        in += v * (c1 - rv) * (c1 - rv);
        out += (1 - v) * (c2 - rv) * (c2 - rv);
    });
    el *= u.geometry().voxel_measure();
    return {el, std::fabs(in), std::fabs(out), el + lambda * std::fabs(in) + lambda * std::fabs(out)};
}

/// Boundary = foreground with a background or out-of-grid face neighbour.
inline std::vector<Index> boundary(const ace::ScalarField& m) {
    std::vector<Index> out;
    for_each_index(m.geometry(), [&](Index p) {
        if (value(m, p) != 1.0) return;
        for (std::size_t a = 0; a < m.ndim(); ++a) {
            for (long s : {-1L, 1L}) {
                const Index q = shifted(p, a, s);
                if (q[a] < 0 || q[a] >= static_cast<long>(m.geometry().extent(a)) || value(m, q) != 1.0) {
                    out.push_back(p);
                    return;
                }
            }
        }
    });
    return out;
}

inline double hd95(const ace::ScalarField& a, const ace::ScalarField& b) {
    const auto ba = boundary(a), bb = boundary(b);
    auto dist = [&](Index p, Index q) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.ndim(); ++k) {
            const double d = static_cast<double>(p[k] - q[k]) * a.geometry().spacing(k);
            s += d * d;
        }
        return s;
    };
    std::vector<double> pooled;
    for (const auto& p : ba) {
        double best = INFINITY;
        for (const auto& q : bb) best = std::min(best, dist(p, q));
        pooled.push_back(std::sqrt(best));
    }
    for (const auto& q : bb) {
        double best = INFINITY;
        for (const auto& p : ba) best = std::min(best, dist(q, p));
        pooled.push_back(std::sqrt(best));
    }
    std::sort(pooled.begin(), pooled.end());
    const double pos = 0.95 * static_cast<double>(pooled.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, pooled.size() - 1);
    return pooled[lo] + (pos - static_cast<double>(lo)) * (pooled[hi] - pooled[lo]);
}

inline double dice(const ace::ScalarField& a, const ace::ScalarField& b) {
    double na = 0, nb = 0, both = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += a[i];
        nb += b[i];
        both += a[i] * b[i];
    }
    return na + nb == 0 ? 1.0 : 2.0 * both / (na + nb);
}

} // namespace oracle
