#pragma once

#include <ostream>

namespace citemetrics::cli {

enum ExitCode : int { kOk = 0, kUsageOrParse = 1, kUndefinedMetric = 2, kFixtureInvalid = 3 };

/// Entry point of the `citemetrics` command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace citemetrics::cli
