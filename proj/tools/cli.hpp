#pragma once

#include <ostream>

namespace rrid {

/// Exit codes of the rrid command.
enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_domain = 2,
    exit_unknown_name = 3,
    exit_bad_flags = 4,
    exit_catalog = 5,
    exit_internal = 6,
};

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace rrid
