#pragma once

#include <functional>
#include <iosfwd>

namespace CLI {
class App;
}

namespace ace::cli {

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

struct Command {
    CLI::App* app = nullptr;
    /// Runs after a successful parse; returns the exit code.
    std::function<int()> run;
};

Command add_synth(CLI::App& root, Streams streams);
Command add_curvbench(CLI::App& root, Streams streams);
Command add_segment(CLI::App& root, Streams streams);
Command add_gradcheck(CLI::App& root, Streams streams);
Command add_metrics(CLI::App& root, Streams streams);

} // namespace ace::cli
