#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "ace/grad.hpp"
#include "commands.hpp"
#include "common.hpp"
#include "manifest.hpp"

namespace ace::cli {

namespace {

struct GradcheckOptions {
    std::vector<std::size_t> shape{12, 12};
    std::string mode = "auto";
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    double tol = 1e-5;
    double alpha = 0.001;
    double beta = 2.0;
    double lambda = 1.0;
    double c1 = 1.0;
    double c2 = 0.0;
};

int run_gradcheck(const CLI::App& sub, const GradcheckOptions& o, Streams streams) {
    require_shape(o.shape);
    EnergyParams params;
    params.alpha = o.alpha;
    params.beta = o.beta;
    params.lambda = o.lambda;
    params.c1 = o.c1;
    params.c2 = o.c2;
    params.mode = resolve_mode(o.mode, o.shape.size());

    Stopwatch clock;
    const GradCheckReport r = gradcheck(o.shape, o.trials, o.seed, params, o.tol);

    Manifest m("gradcheck");
    m.record_flags(sub);
    m.set("seed", std::to_string(o.seed));
    m.set("resolved.mode", to_string(params.mode));
    m.set("max_abs_error", format_real(r.max_abs_error));
    m.set("max_rel_error", format_real(r.max_rel_error));
    std::string worst;
    for (std::size_t a = 0; a < o.shape.size(); ++a) worst += (a ? "," : "") + std::to_string(r.worst_voxel[a]);
    m.set("worst_voxel", worst);
    m.set("passed", r.passed ? "true" : "false");
    m.record_time("check", clock.seconds());
    streams.out << m.str();
    return r.passed ? 0 : 1;
}

} // namespace

Command add_gradcheck(CLI::App& root, Streams streams) {
    auto o = std::make_shared<GradcheckOptions>();
    CLI::App* sub = root.add_subcommand("gradcheck", "Compare the analytic gradient with finite differences");
    sub->add_option("--shape", o->shape, "Grid extents")->delimiter(',');
    sub->add_option("--mode", o->mode, "Curvature mode; auto = mean2d for 2D, mean3d for 3D")
        ->check(CLI::IsMember({"auto", "mean2d", "mean3d", "fast3d", "lap3d"}));
    sub->add_option("--trials", o->trials, "Random (u, r) pairs")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o->seed, "Trial seed");
    sub->add_option("--tol", o->tol, "Pass threshold on the max relative error")->check(CLI::PositiveNumber);
    sub->add_option("--alpha", o->alpha, "Length weight")->check(CLI::NonNegativeNumber);
    sub->add_option("--beta", o->beta, "Curvature weight")->check(CLI::NonNegativeNumber);
    sub->add_option("--lambda", o->lambda, "Region weight")->check(CLI::PositiveNumber);
    sub->add_option("--c1", o->c1, "Foreground constant");
    sub->add_option("--c2", o->c2, "Background constant");
    return {sub, [sub, o, streams] { return run_gradcheck(*sub, *o, streams); }};
}

} // namespace ace::cli
