#pragma once

#include <string>
#include <vector>

#include "freeaut/report.hpp"

namespace freeaut {

struct RunResult {
    int exit_code = 0;
    Json report;       // machine-readable report (also printed with --json)
    std::string text;  // human-readable output
};

// Executes one CLI command; args exclude the program name.
// Exit codes: 0 decided (any verdict), 2 input error, 3 resource limit,
// 1 internal failure.
RunResult run_command(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

} // namespace freeaut
