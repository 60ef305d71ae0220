#pragma once

#include <string>
#include <vector>

namespace dsm {

// Exit codes shared by every subcommand.
enum ExitCode {
    exit_ok = 0,
    exit_validation = 2,
    exit_no_signal = 3,
    exit_io = 4,
};

// Parses argv and dispatches to one of the subcommands: synthesize,
// recover-time, reconstruct, slab, noise-study, export-config. Returns the
// process exit code; never throws.
int run_cli(int argc, const char* const* argv);

// Convenience overload for tests.
int run_cli(const std::vector<std::string>& args);

// Worker cap: --threads flag, DSM_THREADS env var, hardware default.
int resolve_thread_count(int flag_value);

} // namespace dsm
