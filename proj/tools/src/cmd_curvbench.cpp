#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ace/curvature.hpp"
#include "ace/io.hpp"
#include "ace/synth.hpp"
#include "commands.hpp"
#include "common.hpp"
#include "manifest.hpp"

namespace ace::cli {

namespace {

struct CurvbenchOptions {
    std::vector<std::string> modes{"mean2d"};
    std::vector<std::size_t> shape;
    double radius = 0.0;
    std::size_t repeat = 5;
    std::string out;
};

struct BenchRow {
    std::string mode;
    std::string input;
    std::vector<std::size_t> shape;
    double radius = 0.0;
    double max_rel_error = 0.0;
    double mean_rel_error = 0.0;
    double probe = 0.0;
    double median_seconds = 0.0;
    std::size_t repeats = 0;
};

// Bowl u = |x - c|^2 / (2R) about the grid centre. Central differences are
// exact on quadratics, so interior voxels have closed-form targets.
ScalarField bowl(const std::vector<std::size_t>& shape, double R) {
    const Geometry g(shape);
    std::vector<double> u(g.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto idx = g.index(i);
        double s = 0.0;
        for (std::size_t a = 0; a < 3; ++a) {
            const double d = static_cast<double>(idx[a]) - static_cast<double>(shape[a] - 1) / 2.0;
            s += d * d;
        }
        u[i] = s / (2.0 * R);
    }
    return ScalarField(g, std::move(u));
}

double bowl_target(CurvatureMode mode, double rho2, double R) {
    switch (mode) {
    case CurvatureMode::Mean3D: return (3.0 + 2.0 * rho2 / (R * R)) / R / std::sqrt(1.0 + rho2 / (R * R));
    case CurvatureMode::Fast3D: return 3.0 / (R * R);
    case CurvatureMode::Laplacian3D: return 3.0 / R;
    case CurvatureMode::Mean2D: break;
    }
    return 0.0;
}

BenchRow bench(CurvatureMode mode, std::vector<std::size_t> shape, double radius, std::size_t repeat) {
    const bool planar = mode == CurvatureMode::Mean2D;
    if (shape.empty()) shape = planar ? std::vector<std::size_t>{256, 256} : std::vector<std::size_t>{64, 64, 64};
    require_shape(shape);
    if (shape.size() != mode_ndim(mode)) {
        throw std::invalid_argument("mode " + to_string(mode) + " needs a " + std::to_string(mode_ndim(mode)) +
                                    "D shape, got " + join_shape(shape));
    }
    if (radius == 0.0) radius = planar ? 40.0 : 1.0;
    if (!(radius > 0.0)) throw std::invalid_argument("--radius must be > 0");

    const ScalarField u = planar ? hemisphere_field(shape, radius) : bowl(shape, radius);
    const Geometry& g = u.geometry();

    std::vector<double> times;
    ScalarField k;
    for (std::size_t r = 0; r < repeat; ++r) {
        Stopwatch clock;
        k = curvature(u, mode);
        times.push_back(clock.seconds());
    }
    std::sort(times.begin(), times.end());
    const std::size_t n = times.size();
    const double median = n % 2 ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);

    double max_err = 0.0, sum_err = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto idx = g.index(i);
        double rho2 = 0.0;
        bool inside = true;
        for (std::size_t a = 0; a < g.ndim(); ++a) {
            const double d = static_cast<double>(idx[a]) - static_cast<double>(shape[a] - 1) / 2.0;
            rho2 += d * d;
            if (idx[a] == 0 || idx[a] + 1 == shape[a]) inside = false;
        }
        double err = 0.0;
        if (planar) {
            // Inner cap: rho <= 0.6 r, target |K| = 1/r.
            if (rho2 > 0.36 * radius * radius) continue;
            err = std::fabs(std::fabs(k[i]) * radius - 1.0);
        } else {
            if (!inside) continue;
            const double target = bowl_target(mode, rho2, radius);
            err = std::fabs(k[i] - target) / std::fabs(target);
        }
        max_err = std::max(max_err, err);
        sum_err += err;
        ++count;
    }

    std::vector<std::size_t> centre(g.ndim());
    for (std::size_t a = 0; a < g.ndim(); ++a) centre[a] = shape[a] / 2;
    BenchRow row;
    row.mode = to_string(mode);
    row.input = planar ? "hemisphere" : "bowl";
    row.shape = shape;
    row.radius = radius;
    row.max_rel_error = max_err;
    row.mean_rel_error = count ? sum_err / static_cast<double>(count) : 0.0;
    row.probe = k[g.offset(centre)];
    row.median_seconds = median;
    row.repeats = repeat;
    return row;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "mode,input,shape,radius,max_rel_error,mean_rel_error,center_value,median_seconds,repeats\n";
    for (const auto& r : rows) {
        std::string shape = join_shape(r.shape);
        std::replace(shape.begin(), shape.end(), ',', 'x');
        os << r.mode << ',' << r.input << ',' << shape << ',' << format_real(r.radius) << ','
           << format_real(r.max_rel_error) << ',' << format_real(r.mean_rel_error) << ',' << format_real(r.probe)
           << ',' << format_real(r.median_seconds) << ',' << r.repeats << '\n';
    }
    return os.str();
}

int run_curvbench(const CLI::App& sub, const CurvbenchOptions& o, Streams streams) {
    std::vector<CurvatureMode> modes;
    for (const auto& name : o.modes) modes.push_back(parse_curvature_mode(name));
    if (o.repeat == 0) throw UsageError("--repeat must be >= 1");

    Manifest m("curvbench");
    m.record_flags(sub);
    std::vector<BenchRow> rows;
    for (CurvatureMode mode : modes) {
        Stopwatch clock;
        rows.push_back(bench(mode, o.shape, o.radius, o.repeat));
        m.record_time(to_string(mode), clock.seconds());
    }
    const std::string csv = to_csv(rows);
    if (o.out.empty()) {
        streams.out << csv;
    } else {
        io::write_text(o.out, csv);
        m.write(o.out + ".manifest.txt");
        streams.out << "wrote " << o.out << "\n";
    }
    return 0;
}

} // namespace

Command add_curvbench(CLI::App& root, Streams streams) {
    auto o = std::make_shared<CurvbenchOptions>();
    CLI::App* sub = root.add_subcommand("curvbench", "Curvature accuracy against analytic targets, and timing");
    sub->add_option("--mode", o->modes, "Curvature modes, comma-separated: mean2d, mean3d, fast3d, lap3d")
        ->delimiter(',')
        ->check(CLI::IsMember({"mean2d", "mean3d", "fast3d", "lap3d"}));
    sub->add_option("--shape", o->shape, "Grid extents (default 256,256 for mean2d, 64,64,64 otherwise)")->delimiter(',');
    sub->add_option("--radius", o->radius,
                    "Hemisphere radius for mean2d (default 40); bowl scale R in u = |x|^2/(2R) for 3D (default 1)");
    sub->add_option("--repeat", o->repeat, "Timed evaluations per mode; the median is reported");
    sub->add_option("--out", o->out, "CSV output path (default: stdout)");
    return {sub, [sub, o, streams] { return run_curvbench(*sub, *o, streams); }};
}

} // namespace ace::cli
