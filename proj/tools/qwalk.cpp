// qwalk: command-line front end for the quantum walk simulator.

#include <iostream>

#include "qwalk/cli_io.hpp"

int main(int argc, char** argv) {
    using namespace qwalk;
    ParsedArgs args;
    try {
        args = parse_args(argc, argv);
    } catch (const Error& e) {
        std::cerr << "qwalk: " << e.what() << '\n';
        return 2;
    }
    if (args.help) {
        std::cout << args.help_text;
        return 0;
    }

    try {
        const RunResult result = run(args.config);
        if (args.config.output.empty()) {
            emit_csv(result, args.config, std::cout);
            std::cout.flush();
            if (!std::cout) {
                std::cerr << "qwalk: failed writing to stdout\n";
                return 1;
            }
        } else {
            write_csv(result, args.config, args.config.output);
        }
    } catch (const Error& e) {
        std::cerr << "qwalk: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return 1;
    }
    return 0;
}
