#include <algorithm>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "ace/io.hpp"
#include "ace/synth.hpp"
#include "commands.hpp"
#include "common.hpp"
#include "manifest.hpp"

namespace ace::cli {

namespace {

struct SynthOptions {
    std::string kind;
    std::vector<std::size_t> shape;
    std::string out;
    std::uint64_t seed = 0;
    double noise = 0.1;
    double radius = 0.0;
    std::vector<double> center;
    double fg = 1.0;
    double bg = 0.0;
    std::size_t width = 6;
    std::size_t gaps = 2;
    std::size_t gap_len = 8;
};

int run_synth(const CLI::App& sub, const SynthOptions& o, Streams streams) {
    require_shape(o.shape);
    const bool tube = o.kind == "tube";
    const bool ball = !tube;
    for (const char* name : {"--width", "--gaps", "--gap-len"}) {
        if (ball && sub.count(name) > 0) throw UsageError(std::string(name) + " only applies to --case tube");
    }
    for (const char* name : {"--radius", "--center", "--fg", "--bg"}) {
        if (tube && sub.count(name) > 0) throw UsageError(std::string(name) + " does not apply to --case tube");
    }
    const std::size_t ndim = o.kind == "sphere" ? 3 : 2;
    if (o.shape.size() != ndim) {
        throw std::invalid_argument("--case " + o.kind + " needs a " + std::to_string(ndim) + "D shape");
    }

    Stopwatch clock;
    SynthCase c;
    std::vector<double> centre = o.center;
    double radius = o.radius;
    if (ball) {
        if (centre.empty()) {
            for (std::size_t e : o.shape) centre.push_back(static_cast<double>(e - 1) / 2.0);
        }
        if (centre.size() != ndim) throw UsageError("--center needs one coordinate per axis");
        if (radius == 0.0) {
            radius = static_cast<double>(*std::min_element(o.shape.begin(), o.shape.end())) / 4.0;
        }
    }
    if (o.kind == "disk") {
        c = disk_case(o.shape, {centre[0], centre[1]}, radius, o.fg, o.bg, o.noise, o.seed);
    } else if (o.kind == "sphere") {
        c = sphere_case_3d(o.shape, {centre[0], centre[1], centre[2]}, radius, o.fg, o.bg, o.noise, o.seed);
    } else {
        c = broken_tube_case(o.shape, o.width, o.gaps, o.gap_len, o.noise, o.seed);
    }
    const double t_generate = clock.seconds();

    const std::filesystem::path dir(o.out);
    ensure_directory(dir);
    Stopwatch write_clock;
    io::write_volume(c.image, dir / "image.vf32");
    io::write_volume(c.ground_truth, dir / "gt.vf32");

    Manifest m("synth");
    m.record_flags(sub);
    m.set("seed", std::to_string(o.seed));
    m.set("descriptor", c.descriptor);
    if (ball) {
        std::string cs;
        for (std::size_t a = 0; a < centre.size(); ++a) cs += (a ? "," : "") + format_real(centre[a]);
        m.set("resolved.center", cs);
        m.set("resolved.radius", format_real(radius));
    }
    m.set("output.image", "image.vf32");
    m.set("output.ground_truth", "gt.vf32");
    m.record_time("generate", t_generate);
    m.record_time("write", write_clock.seconds());
    m.write(dir / "manifest.txt");

    streams.out << c.descriptor << "\n" << "wrote " << (dir / "image.vf32").string() << ", "
                << (dir / "gt.vf32").string() << "\n";
    return 0;
}

} // namespace

Command add_synth(CLI::App& root, Streams streams) {
    auto o = std::make_shared<SynthOptions>();
    CLI::App* sub = root.add_subcommand("synth", "Write a synthetic image and its ground truth");
    sub->add_option("--case", o->kind, "Shape family")->required()->check(CLI::IsMember({"disk", "tube", "sphere"}));
    sub->add_option("--shape", o->shape, "Grid extents H,W or D,H,W")->required()->delimiter(',');
    sub->add_option("--out", o->out, "Output directory")->required();
    sub->add_option("--seed", o->seed, "Noise seed");
    sub->add_option("--noise", o->noise, "Gaussian noise sigma")->check(CLI::NonNegativeNumber);
    sub->add_option("--radius", o->radius, "Disk/sphere radius in voxels (default: min extent / 4)");
    sub->add_option("--center", o->center, "Disk/sphere centre, one coordinate per axis (default: grid centre)")
        ->delimiter(',');
    sub->add_option("--fg", o->fg, "Foreground intensity");
    sub->add_option("--bg", o->bg, "Background intensity");
    sub->add_option("--width", o->width, "Tube width in rows");
    sub->add_option("--gaps", o->gaps, "Number of erased tube segments");
    sub->add_option("--gap-len", o->gap_len, "Length of each erased segment in columns");
    return {sub, [sub, o, streams] { return run_synth(*sub, *o, streams); }};
}

} // namespace ace::cli
