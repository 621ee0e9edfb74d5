#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "melfs/harness.hpp"

int main(int argc, char** argv) {
    using namespace melfs;

    std::vector<std::string> args(argv + 1, argv + argc);
    ExperimentSpec spec;
    try {
        spec = parse_spec(args);
    } catch (const HelpRequested& help) {
        std::fputs(help.what(), stdout);
        return 0;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        std::fprintf(stderr, "run with --help for the option list\n");
        return 2;
    }

    try {
        const auto rows = run_experiment(spec);
        std::fputs(render_summary_table(rows).c_str(), stdout);
        std::printf("results written to %s\n", spec.out_dir.c_str());
        for (const auto& row : rows)
            if (row.failed) return 1;
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
