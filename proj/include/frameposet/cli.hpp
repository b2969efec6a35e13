#pragma once

namespace frameposet {

/// Command-line front end. Exit codes: 0 success, 2 validation error,
/// 3 resource-cap exhaustion, 4 inconclusive heuristic, 1 internal error.
int run_cli(int argc, char** argv);

} // namespace frameposet
