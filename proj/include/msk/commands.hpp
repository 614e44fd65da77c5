#pragma once

#include "msk/json_io.hpp"

namespace msk {

struct RunOptions {
    Complex probe = kDefaultProbe;
    int trunc_N = 24;
    bool section_csv = false;  // oracle: include the section as interleaved re/im CSV
};

/// Dispatch one CLI command against a parsed JSON input. The returned
/// report is deterministic for fixed input and options.
jsn run_command(const std::string& command, const jsn& input, const RunOptions& opts = {});

/// 0 pass/success, 2 verified-FAIL, 3 undecided.
int exit_code_for(const jsn& report);

std::vector<std::string> command_names();

}  // namespace msk
