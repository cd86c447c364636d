#pragma once

namespace qsc_cli {

// Full command-line driver; returns the process exit code
// (0 certified, 1 rejected, 2 inconclusive, 3 bad input or usage).
int run(int argc, char** argv);

} // namespace qsc_cli
