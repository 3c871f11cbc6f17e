#pragma once

#include "glt/config.hpp"

namespace glt {

/// Executes every command in cfg.commands, writing the CSV artifacts and a
/// manifest into cfg.out_dir. Returns the CLI exit code: 0 on success,
/// 2 for configuration problems, 3 for numeric failures, 4 for I/O failures.
int run(const RunConfig& cfg);

/// Full command-line entry point:
///   glt extract|compare|tables|weyl|qcurve|counterexample
///       --config <path> [--out <dir>] [--threads <k>]
int cli_main(int argc, const char* const* argv);

}  // namespace glt
