#pragma once

#include <atomic>
#include <string>

#include "secgraph/config.hpp"

namespace secgraph {

// Executes one CLI subcommand (graph, simulate, sweep, sweep-rho, bounds)
// against a resolved configuration and writes its output files. Returns
// the process exit code: 0 on success, 2 on configuration errors, 3 on
// I/O errors. `stop`, when non-null, is polled during Monte Carlo runs;
// after it fires, partial results are flushed with a truncated marker in
// the JSON report.
int run_command(const std::string& command, const KeyValueConfig& config,
                const std::atomic<bool>* stop = nullptr);

}  // namespace secgraph
