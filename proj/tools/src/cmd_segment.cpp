#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ace/io.hpp"
#include "ace/metrics.hpp"
#include "ace/solver.hpp"
#include "commands.hpp"
#include "common.hpp"
#include "manifest.hpp"

namespace ace::cli {

namespace {

struct SegmentOptions {
    std::string image;
    std::string init = "uniform";
    std::string gt;
    std::string out;
    double alpha = 0.001;
    double beta = 2.0;
    double lambda = 1.0;
    double c1 = 1.0;
    double c2 = 0.0;
    double eps = 1e-6;
    std::string mode = "auto";
    std::size_t iters = 500;
    double step = 0.1;
    std::string optimizer = "gd";
    double momentum = 0.9;
    std::string param = "clipped";
    std::string region = "cv";
    double stop_tol = 1e-7;
    double threshold = 0.5;
    std::uint64_t seed = 0;
};

std::string trace_csv(const SolverTrace& trace) {
    std::ostringstream os;
    os << "iter,elastica,region_in,region_out,total,c1,c2\n";
    for (std::size_t t = 0; t < trace.energies.size(); ++t) {
        const auto& e = trace.energies[t];
        const auto& c = trace.constants[t];
        os << t << ',' << format_real(e.elastica) << ',' << format_real(e.region_in) << ','
           << format_real(e.region_out) << ',' << format_real(e.total) << ',' << format_real(c.c1) << ','
           << format_real(c.c2) << '\n';
    }
    return os.str();
}

int run_segment(const CLI::App& sub, const SegmentOptions& o, Streams streams) {
    const std::filesystem::path dir(o.out);
    Manifest m("segment");
    m.record_flags(sub);
    m.set("seed", std::to_string(o.seed));

    Stopwatch load_clock;
    const ScalarField image = io::read_any(o.image);
    for (double v : image.values()) {
        if (v < 0.0 || v > 1.0) throw std::invalid_argument("--image values must lie in [0,1]");
    }
    const SoftMask init = o.init == "uniform" ? SoftMask(image.with_values(std::vector<double>(image.size(), 0.5)))
                                              : SoftMask(io::read_any(o.init));
    if (!init.geometry().same_shape(image.geometry())) throw std::invalid_argument("--init shape differs from --image");
    std::optional<ScalarField> gt;
    if (!o.gt.empty()) {
        gt = io::read_any(o.gt);
        if (!gt->geometry().same_shape(image.geometry())) throw std::invalid_argument("--gt shape differs from --image");
    }
    m.record_time("load", load_clock.seconds());

    EnergyParams params;
    params.alpha = o.alpha;
    params.beta = o.beta;
    params.lambda = o.lambda;
    params.c1 = o.c1;
    params.c2 = o.c2;
    params.cfg.eps = o.eps;
    params.mode = resolve_mode(o.mode, image.ndim());
    m.set("resolved.mode", to_string(params.mode));

    SolverConfig cfg;
    cfg.max_iters = o.iters;
    cfg.step_size = o.step;
    cfg.optimizer = o.optimizer == "momentum" ? Optimizer::Momentum : Optimizer::GradientDescent;
    cfg.momentum = o.momentum;
    cfg.parameterization = o.param == "logistic" ? Parameterization::Logistic : Parameterization::DirectClipped;
    cfg.region_mode = o.region == "cv" ? RegionMode::CvMeans : RegionMode::FixedConstants;
    cfg.stop_tol = o.stop_tol;
    cfg.seed = o.seed;
    validate(params, image.geometry());
    validate(cfg);
    ensure_directory(dir);

    Stopwatch solve_clock;
    SegmentResult result;
    try {
        result = segment(image, init, params, cfg);
    } catch (const SolverDiverged& e) {
        io::write_text(dir / "trace.csv", trace_csv(e.partial_trace()));
        m.set("status", "diverged");
        m.set("diverged_at_iteration", std::to_string(e.iteration()));
        m.record_time("solve", solve_clock.seconds());
        m.write(dir / "manifest.txt");
        streams.err << "error: " << e.what() << " (partial trace in " << (dir / "trace.csv").string() << ")\n";
        return 1;
    }
    m.record_time("solve", solve_clock.seconds());

    Stopwatch write_clock;
    io::write_volume(result.mask.field(), dir / "mask.vf32");
    io::write_text(dir / "trace.csv", trace_csv(result.trace));
    m.set("status", "ok");
    m.set("iterations_run", std::to_string(result.trace.iterations_run));
    m.set("converged", result.trace.converged ? "true" : "false");
    if (!result.trace.energies.empty()) m.set("final_energy", format_real(result.trace.energies.back().total));

    int code = 0;
    if (gt) {
        const MetricsReport report = evaluate_masks(threshold(result.mask.field(), o.threshold), *gt);
        io::write_metrics_csv({{std::filesystem::path(o.image).stem().string(), report}}, dir / "metrics.csv");
        streams.out << io::format_metrics_csv({{std::filesystem::path(o.image).stem().string(), report}});
        if (!report.hd95) code = 1;
    }
    m.record_time("write", write_clock.seconds());
    m.write(dir / "manifest.txt");
    streams.out << "iterations " << result.trace.iterations_run << (result.trace.converged ? " (converged)" : "")
                << ", mask written to " << (dir / "mask.vf32").string() << "\n";
    return code;
}

} // namespace

Command add_segment(CLI::App& root, Streams streams) {
    auto o = std::make_shared<SegmentOptions>();
    CLI::App* sub = root.add_subcommand("segment", "Minimize the elastica energy over a soft mask");
    sub->add_option("--image", o->image, "Image (VF32 or PGM), intensities in [0,1]")->required()->check(CLI::ExistingFile);
    sub->add_option("--init", o->init, "'uniform' (0.5 everywhere) or a mask file");
    sub->add_option("--gt", o->gt, "Ground truth; writes metrics.csv when given")->check(CLI::ExistingFile);
    sub->add_option("--out", o->out, "Output directory")->required();
    sub->add_option("--alpha", o->alpha, "Length weight")->check(CLI::NonNegativeNumber);
    sub->add_option("--beta", o->beta, "Curvature weight")->check(CLI::NonNegativeNumber);
    sub->add_option("--lambda", o->lambda, "Region weight")->check(CLI::PositiveNumber);
    sub->add_option("--c1", o->c1, "Foreground constant (initial value in cv mode)");
    sub->add_option("--c2", o->c2, "Background constant (initial value in cv mode)");
    sub->add_option("--eps", o->eps, "Gradient-magnitude smoothing")->check(CLI::PositiveNumber);
    sub->add_option("--mode", o->mode, "Curvature mode; auto = mean2d for 2D, mean3d for 3D")
        ->check(CLI::IsMember({"auto", "mean2d", "mean3d", "fast3d", "lap3d"}));
    sub->add_option("--iters", o->iters, "Maximum iterations");
    sub->add_option("--step", o->step, "Step size")->check(CLI::PositiveNumber);
    sub->add_option("--optimizer", o->optimizer, "gd or momentum")->check(CLI::IsMember({"gd", "momentum"}));
    sub->add_option("--momentum", o->momentum, "Momentum coefficient")->check(CLI::Range(0.0, 0.999999));
    sub->add_option("--param", o->param, "clipped or logistic")->check(CLI::IsMember({"clipped", "logistic"}));
    sub->add_option("--region", o->region, "cv (re-estimate c1/c2) or fixed")->check(CLI::IsMember({"cv", "fixed"}));
    sub->add_option("--stop-tol", o->stop_tol, "Relative energy change over 10 iterations")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--threshold", o->threshold, "Binarization level for metrics")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--seed", o->seed, "Recorded in the manifest");
    return {sub, [sub, o, streams] { return run_segment(*sub, *o, streams); }};
}

} // namespace ace::cli
