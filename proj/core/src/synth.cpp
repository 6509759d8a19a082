#include "ace/synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ace/random.hpp"

namespace ace {

namespace {

void check_intensities(double fg, double bg, double noise_sigma) {
    if (fg == bg) throw std::invalid_argument("synth: fg and bg intensities must differ");
    if (fg < 0.0 || fg > 1.0 || bg < 0.0 || bg > 1.0) throw std::invalid_argument("synth: intensities must lie in [0,1]");
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) throw std::invalid_argument("synth: noise_sigma must be >= 0");
}

ScalarField render(const Geometry& g, const std::vector<double>& support, double fg, double bg, double noise_sigma,
                   std::uint64_t seed) {
    std::vector<double> img(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        double v = support[i] == 1.0 ? fg : bg;
        if (noise_sigma > 0.0) v += noise_sigma * random::gaussian(seed, i);
        img[i] = std::clamp(v, 0.0, 1.0);
    }
    return ScalarField(g, std::move(img));
}

std::string describe_ball(const char* name, std::span<const std::size_t> shape, std::span<const double> center,
                          double radius, double fg, double bg, double noise_sigma, std::uint64_t seed) {
    std::ostringstream os;
    os << name << " shape=";
    for (std::size_t a = 0; a < shape.size(); ++a) os << (a ? "," : "") << shape[a];
    os << " center=";
    for (std::size_t a = 0; a < center.size(); ++a) os << (a ? "," : "") << center[a];
    os << " radius=" << radius << " fg=" << fg << " bg=" << bg << " noise=" << noise_sigma << " seed=" << seed;
    return os.str();
}

SynthCase ball_case(const char* name, std::size_t ndim, std::span<const std::size_t> shape,
                    std::span<const double> center, double radius, double fg, double bg, double noise_sigma,
                    std::uint64_t seed) {
    if (shape.size() != ndim) throw std::invalid_argument(std::string(name) + ": needs a " + std::to_string(ndim) + "D shape");
    if (!(radius > 2.0)) throw std::invalid_argument(std::string(name) + ": radius must exceed 2 voxels");
    check_intensities(fg, bg, noise_sigma);
    const Geometry g(shape);
    for (std::size_t a = 0; a < ndim; ++a) {
        if (center[a] - radius < 0.0 || center[a] + radius > static_cast<double>(shape[a] - 1)) {
            throw std::invalid_argument(std::string(name) + ": ball does not fit inside the grid");
        }
    }
    const double r2 = radius * radius;
    std::vector<double> gt(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto idx = g.index(i);
        double d2 = 0.0;
        for (std::size_t a = 0; a < ndim; ++a) {
            const double d = static_cast<double>(idx[a]) - center[a];
            d2 += d * d;
        }
        gt[i] = d2 <= r2 ? 1.0 : 0.0;
    }
    SynthCase c{render(g, gt, fg, bg, noise_sigma, seed), ScalarField(g, gt), ""};
    c.descriptor = describe_ball(name, shape, center, radius, fg, bg, noise_sigma, seed);
    return c;
}

} // namespace

SynthCase disk_case(std::span<const std::size_t> shape, std::array<double, 2> center, double radius, double fg,
                    double bg, double noise_sigma, std::uint64_t seed) {
    return ball_case("disk", 2, shape, center, radius, fg, bg, noise_sigma, seed);
}

SynthCase sphere_case_3d(std::span<const std::size_t> shape, std::array<double, 3> center, double radius, double fg,
                         double bg, double noise_sigma, std::uint64_t seed) {
    return ball_case("sphere", 3, shape, center, radius, fg, bg, noise_sigma, seed);
}

SynthCase broken_tube_case(std::span<const std::size_t> shape, std::size_t width, std::size_t gap_count,
                           std::size_t gap_len, double noise_sigma, std::uint64_t seed) {
    if (shape.size() != 2) throw std::invalid_argument("tube: needs a 2D shape");
    check_intensities(kTubeForeground, kTubeBackground, noise_sigma);
    const std::size_t rows = shape[0];
    const std::size_t cols = shape[1];
    if (width == 0 || width + 2 > rows) throw std::invalid_argument("tube: width must be in [1, rows-2]");
    if (gap_count > 0 && gap_len == 0) throw std::invalid_argument("tube: gap_len must be >= 1");

    const std::size_t margin = std::max<std::size_t>(1, cols / 8);
    if (cols < 2 * margin + 3) throw std::invalid_argument("tube: grid too narrow");
    const std::size_t start = margin;
    const std::size_t stop = cols - margin;  // exclusive
    const std::size_t span = stop - start;
    if (gap_count * gap_len + (gap_count + 1) > span) throw std::invalid_argument("tube: gaps do not fit the tube span");

    // Gap k is centred at start + (k+1) * span / (gap_count+1).
    std::vector<bool> erased(cols, false);
    std::size_t prev_end = start;
    for (std::size_t k = 0; k < gap_count; ++k) {
        const double centre = static_cast<double>(start) +
                              static_cast<double>((k + 1) * span) / static_cast<double>(gap_count + 1);
        const auto first = static_cast<std::size_t>(std::llround(centre - static_cast<double>(gap_len) / 2.0));
        if (first <= prev_end || first + gap_len >= stop) {
            throw std::invalid_argument("tube: gaps overlap or touch the tube ends");
        }
        for (std::size_t c = first; c < first + gap_len; ++c) erased[c] = true;
        prev_end = first + gap_len;
    }

    const Geometry g(shape);
    const std::size_t row0 = (rows - width) / 2;
    std::vector<double> gt(g.size(), 0.0), visible(g.size(), 0.0);
    for (std::size_t j = row0; j < row0 + width; ++j) {
        for (std::size_t i = start; i < stop; ++i) {
            gt[j * cols + i] = 1.0;
            if (!erased[i]) visible[j * cols + i] = 1.0;
        }
    }

    std::ostringstream os;
    os << "tube shape=" << rows << "," << cols << " width=" << width << " gaps=" << gap_count << " gap_len=" << gap_len
       << " noise=" << noise_sigma << " seed=" << seed;
    return SynthCase{render(g, visible, kTubeForeground, kTubeBackground, noise_sigma, seed), ScalarField(g, gt),
                     os.str()};
}

ScalarField hemisphere_field(std::span<const std::size_t> shape, double radius) {
    if (shape.size() != 2) throw std::invalid_argument("hemisphere: needs a 2D shape");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("hemisphere: radius must be > 0");
    const double cy = static_cast<double>(shape[0] - 1) / 2.0;
    const double cx = static_cast<double>(shape[1] - 1) / 2.0;
    const double rim = kHemisphereRim * radius;
    if (rim < 1.0 || rim + 1.0 > std::min(cy, cx)) {
        throw std::invalid_argument("hemisphere: cap rim must lie inside the grid");
    }
    const double rim_height = std::sqrt(radius * radius - rim * rim);
    const double rim_slope = -rim / rim_height;

    const Geometry g(shape);
    std::vector<double> u(g.size());
    for (std::size_t j = 0; j < shape[0]; ++j) {
        for (std::size_t i = 0; i < shape[1]; ++i) {
            const double dy = static_cast<double>(j) - cy;
            const double dx = static_cast<double>(i) - cx;
            const double rho2 = dy * dy + dx * dx;
            const double rho = std::sqrt(rho2);
            u[j * shape[1] + i] = rho <= rim ? std::sqrt(radius * radius - rho2) : rim_height + rim_slope * (rho - rim);
        }
    }
    return ScalarField(g, std::move(u));
}

} // namespace ace
