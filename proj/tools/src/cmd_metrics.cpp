#include <map>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "ace/io.hpp"
#include "ace/metrics.hpp"
#include "ace/solver.hpp"
#include "commands.hpp"
#include "common.hpp"
#include "manifest.hpp"

namespace ace::cli {

namespace fs = std::filesystem;

namespace {

struct MetricsOptions {
    std::string pred;
    std::string gt;
    std::string out;
    double threshold = 0.5;
};

bool is_mask_file(const fs::path& p) {
    const auto ext = p.extension().string();
    return fs::is_regular_file(p) && (ext == ".vf32" || ext == ".pgm");
}

// Case name -> file, keyed by file stem.
std::map<std::string, fs::path> list_cases(const fs::path& dir) {
    std::map<std::string, fs::path> cases;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!is_mask_file(entry.path())) continue;
        const std::string name = entry.path().stem().string();
        if (!cases.emplace(name, entry.path()).second) {
            throw std::invalid_argument("two files share the case name '" + name + "' in " + dir.string());
        }
    }
    return cases;
}

int run_metrics(const CLI::App& sub, const MetricsOptions& o, Streams streams) {
    const bool pred_dir = fs::is_directory(o.pred);
    const bool gt_dir = fs::is_directory(o.gt);
    if (pred_dir != gt_dir) throw UsageError("--pred and --gt must both be files or both be directories");
    if (!(o.threshold > 0.0 && o.threshold < 1.0)) throw UsageError("--threshold must lie in (0,1)");

    std::vector<std::pair<std::string, std::pair<fs::path, fs::path>>> pairs;
    if (pred_dir) {
        const auto preds = list_cases(o.pred);
        const auto gts = list_cases(o.gt);
        std::vector<std::string> orphans;
        for (const auto& [name, path] : preds) {
            if (!gts.count(name)) orphans.push_back(path.string());
        }
        for (const auto& [name, path] : gts) {
            if (!preds.count(name)) orphans.push_back(path.string());
        }
        if (!orphans.empty()) {
            std::string msg = "unmatched files:";
            for (const auto& p : orphans) msg += " " + p;
            throw std::invalid_argument(msg);
        }
        if (preds.empty()) throw std::invalid_argument("no .vf32 or .pgm files in " + o.pred);
        for (const auto& [name, path] : preds) pairs.push_back({name, {path, gts.at(name)}});
    } else {
        pairs.push_back({fs::path(o.pred).stem().string(), {o.pred, o.gt}});
    }

    Stopwatch clock;
    std::vector<io::NamedReport> reports;
    bool degenerate = false;
    for (const auto& [name, files] : pairs) {
        const ScalarField pred = threshold(io::read_any(files.first), o.threshold);
        const ScalarField gt = io::read_any(files.second);
        if (!pred.geometry().same_shape(gt.geometry())) {
            throw std::invalid_argument("case " + name + ": prediction and ground truth shapes differ");
        }
        if (!is_binary(gt)) throw std::invalid_argument("case " + name + ": ground truth is not binary");
        reports.emplace_back(name, evaluate_masks(pred, gt));
        if (!reports.back().second.hd95) {
            degenerate = true;
            streams.err << "error: case " << name << ": hd95 undefined for an empty mask\n";
        }
    }
    const std::string csv = io::format_metrics_csv(reports);

    Manifest m("metrics");
    m.record_flags(sub);
    m.set("cases", std::to_string(reports.size()));
    m.record_time("evaluate", clock.seconds());
    if (o.out.empty()) {
        streams.out << csv;
    } else {
        io::write_text(o.out, csv);
        m.write(o.out + ".manifest.txt");
        streams.out << "wrote " << reports.size() << " rows to " << o.out << "\n";
    }
    return degenerate ? 1 : 0;
}

} // namespace

Command add_metrics(CLI::App& root, Streams streams) {
    auto o = std::make_shared<MetricsOptions>();
    CLI::App* sub = root.add_subcommand("metrics", "Dice, HD95 and component counts for predictions vs ground truth");
    sub->add_option("--pred", o->pred, "Prediction file or directory")->required()->check(CLI::ExistingPath);
    sub->add_option("--gt", o->gt, "Ground-truth file or directory")->required()->check(CLI::ExistingPath);
    sub->add_option("--out", o->out, "CSV output path (default: stdout)");
    sub->add_option("--threshold", o->threshold, "Predictions >= threshold count as foreground");
    return {sub, [sub, o, streams] { return run_metrics(*sub, *o, streams); }};
}

} // namespace ace::cli
