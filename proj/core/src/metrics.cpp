#include "ace/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace ace {

namespace {

void require_binary_pair(const ScalarField& a, const ScalarField& b, const char* who) {
    if (!a.geometry().same_shape(b.geometry())) throw std::invalid_argument(std::string(who) + ": shapes differ");
    if (!is_binary(a) || !is_binary(b)) throw std::invalid_argument(std::string(who) + ": masks must be binary");
}

// Lower envelope of parabolas (Felzenszwalb & Huttenlocher), one line at a
// time. `f` holds squared distances along the line (+inf for no site).
void edt_line(std::span<double> f, double h, std::vector<double>& d, std::vector<std::size_t>& v,
              std::vector<double>& z) {
    const std::size_t n = f.size();
    const double inf = std::numeric_limits<double>::infinity();
    d.resize(n);
    v.resize(n);
    z.resize(n + 1);
    std::size_t k = 0;
    bool any = false;
    for (std::size_t q = 0; q < n; ++q) {
        if (f[q] == inf) continue;
        const double xq = static_cast<double>(q) * h;
        if (!any) {
            v[0] = q;
            z[0] = -inf;
            z[1] = inf;
            any = true;
            continue;
        }
        const double xv0 = static_cast<double>(v[k]) * h;
        double s = ((f[q] + xq * xq) - (f[v[k]] + xv0 * xv0)) / (2.0 * (xq - xv0));
        while (s <= z[k]) {
            // z[0] is -inf, so this never pops the first parabola.
            --k;
            const double xv = static_cast<double>(v[k]) * h;
            s = ((f[q] + xq * xq) - (f[v[k]] + xv * xv)) / (2.0 * (xq - xv));
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = inf;
    }
    if (!any) return;
    k = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const double xq = static_cast<double>(q) * h;
        while (z[k + 1] < xq) ++k;
        const double dx = static_cast<double>(q > v[k] ? q - v[k] : v[k] - q) * h;
        d[q] = dx * dx + f[v[k]];
    }
    std::copy(d.begin(), d.end(), f.begin());
}

} // namespace

double dice(const ScalarField& a, const ScalarField& b) {
    require_binary_pair(a, b, "dice");
    std::size_t na = 0, nb = 0, both = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool fa = a[i] == 1.0;
        const bool fb = b[i] == 1.0;
        na += fa;
        nb += fb;
        both += fa && fb;
    }
    if (na + nb == 0) return 1.0;
    return 2.0 * static_cast<double>(both) / static_cast<double>(na + nb);
}

std::vector<std::size_t> boundary_voxels(const ScalarField& mask) {
    const Geometry& g = mask.geometry();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i] != 1.0) continue;
        const auto idx = g.index(i);
        bool edge = false;
        for (std::size_t a = 0; a < g.ndim() && !edge; ++a) {
            const std::size_t s = g.stride(a);
            if (idx[a] == 0 || idx[a] + 1 == g.extent(a)) edge = true;
            else if (mask[i - s] != 1.0 || mask[i + s] != 1.0) edge = true;
        }
        if (edge) out.push_back(i);
    }
    return out;
}

std::vector<double> squared_distance_transform(const Geometry& g, const std::vector<bool>& feature,
                                               std::span<const double> spacing) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) dist[i] = feature[i] ? 0.0 : inf;

    std::vector<double> line, d, z;
    std::vector<std::size_t> v;
    // Axis 0 first so per-axis squared terms accumulate in axis order.
    for (std::size_t a = 0; a < g.ndim(); ++a) {
        const std::size_t n = g.extent(a);
        const std::size_t s = g.stride(a);
        const std::size_t outer = g.size() / (n * s);
        line.resize(n);
        for (std::size_t o = 0; o < outer; ++o) {
            for (std::size_t k = 0; k < s; ++k) {
                const std::size_t base = o * n * s + k;
                for (std::size_t i = 0; i < n; ++i) line[i] = dist[base + i * s];
                edt_line(line, spacing[a], d, v, z);
                for (std::size_t i = 0; i < n; ++i) dist[base + i * s] = line[i];
            }
        }
    }
    return dist;
}

double percentile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("percentile: empty sample");
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double hd95(const ScalarField& a, const ScalarField& b, std::span<const double> spacing) {
    require_binary_pair(a, b, "hd95");
    const Geometry& g = a.geometry();
    if (spacing.size() != g.ndim()) throw std::invalid_argument("hd95: spacing rank mismatch");
    const auto ba = boundary_voxels(a);
    const auto bb = boundary_voxels(b);
    if (ba.empty() || bb.empty()) throw EmptyMaskError("hd95: empty mask");

    std::vector<bool> fa(g.size(), false), fb(g.size(), false);
    for (auto i : ba) fa[i] = true;
    for (auto i : bb) fb[i] = true;
    const auto to_b = squared_distance_transform(g, fb, spacing);
    const auto to_a = squared_distance_transform(g, fa, spacing);

    std::vector<double> pooled;
    pooled.reserve(ba.size() + bb.size());
    for (auto i : ba) pooled.push_back(std::sqrt(to_b[i]));
    for (auto i : bb) pooled.push_back(std::sqrt(to_a[i]));
    std::sort(pooled.begin(), pooled.end());
    return percentile_sorted(pooled, 0.95);
}

double hd95(const ScalarField& a, const ScalarField& b) { return hd95(a, b, a.geometry().spacings()); }

std::size_t count_components(const ScalarField& mask, Connectivity connectivity) {
    if (!is_binary(mask)) throw std::invalid_argument("count_components: mask must be binary");
    const Geometry& g = mask.geometry();
    const std::size_t nd = g.ndim();

    std::vector<std::array<int, 3>> offsets;
    for (int dk = -1; dk <= 1; ++dk) {
        for (int dj = -1; dj <= 1; ++dj) {
            for (int di = -1; di <= 1; ++di) {
                const std::array<int, 3> o{dk, dj, di};
                if (nd == 2 && o[2] != 0) continue;
                const int nonzero = (dk != 0) + (dj != 0) + (di != 0);
                if (nonzero == 0) continue;
                if (connectivity == Connectivity::Face && nonzero != 1) continue;
                offsets.push_back(o);
            }
        }
    }

    std::vector<bool> seen(mask.size(), false);
    std::vector<std::size_t> stack;
    std::size_t components = 0;
    for (std::size_t start = 0; start < mask.size(); ++start) {
        if (mask[start] != 1.0 || seen[start]) continue;
        ++components;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            const auto idx = g.index(cur);
            for (const auto& o : offsets) {
                std::array<std::size_t, 3> nb{};
                bool inside = true;
                for (std::size_t a = 0; a < nd; ++a) {
                    const long long c = static_cast<long long>(idx[a]) + o[a];
                    if (c < 0 || c >= static_cast<long long>(g.extent(a))) {
                        inside = false;
                        break;
                    }
                    nb[a] = static_cast<std::size_t>(c);
                }
                if (!inside) continue;
                const std::size_t off = g.offset(std::span<const std::size_t>(nb.data(), nd));
                if (mask[off] == 1.0 && !seen[off]) {
                    seen[off] = true;
                    stack.push_back(off);
                }
            }
        }
    }
    return components;
}

MetricsReport evaluate_masks(const ScalarField& pred, const ScalarField& gt) {
    MetricsReport r;
    r.dice = dice(pred, gt);
    try {
        r.hd95 = hd95(pred, gt);
    } catch (const EmptyMaskError&) {
        r.hd95.reset();
    }
    r.components_pred = count_components(pred);
    r.components_gt = count_components(gt);
    return r;
}

} // namespace ace
