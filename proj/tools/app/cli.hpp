#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "app/job.hpp"
#include "patchant/error.hpp"

namespace patchant::app {

enum class Command { Design, Analyze, Sweep, Pattern };

/// Report text for one command. Warnings and notes go to `notes`, never
/// into the report body.
std::string render(Command command, const JobConfig& job, std::vector<std::string>& notes);

/// 1 for configuration and I/O problems, 3 for non-convergence, 2 otherwise.
int exit_code(ErrorKind kind) noexcept;

/// Full command line, argv[0] included. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patchant::app
