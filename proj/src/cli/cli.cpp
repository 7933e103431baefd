#include "commands.hpp"

#include <invmark/cli.hpp>
#include <invmark/error.hpp>

#include <iostream>

namespace invmark::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fluorescent-marker segmentation annotation toolkit", "invmark"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    const Command commands[] = {add_pair(app),      add_align(app), add_annotate(app),
                                add_synth(app),     add_eval(app),  add_controller(app)};

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kValidationError;
    }

    for (const auto& c : commands) {
        if (!c.app->parsed()) continue;
        try {
            return c.action(out, err);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return kValidationError;
        }
    }
    return kValidationError;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace invmark::cli
