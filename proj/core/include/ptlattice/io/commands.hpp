#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "ptlattice/io/config.hpp"

namespace ptl::io {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitNumerical = 2,
};

struct CommandResult {
    int exit_code = kExitOk;
    std::vector<std::filesystem::path> files;
};

/// Runs one job and writes its outputs into out_dir (created if missing).
/// Library errors are caught and mapped to exit codes; a short summary goes
/// to `log`. Sweeps write every row, carrying per-row status, even when some
/// rows fail numerically.
CommandResult run_command(const JobConfig& job, const std::filesystem::path& out_dir, std::ostream& log);

} // namespace ptl::io
