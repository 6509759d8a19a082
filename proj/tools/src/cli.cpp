#include "ace_cli/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "common.hpp"

namespace ace::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Active contour with elastica: curvature kernels, segmentation and metrics", "ace"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    const Streams streams{out, err};
    const Command commands[] = {
        add_synth(app, streams),     add_curvbench(app, streams), add_segment(app, streams),
        add_gradcheck(app, streams), add_metrics(app, streams),
    };

    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto* sub : app.get_subcommands()) {
            err << "see: ace " << sub->get_name() << " --help\n";
        }
        return kExitUsage;
    }

    for (const auto& cmd : commands) {
        if (!cmd.app->parsed()) continue;
        try {
            return cmd.run();
        } catch (const UsageError& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitFailure;
        }
    }
    return kExitUsage;
}

} // namespace ace::cli
