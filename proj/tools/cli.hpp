#pragma once

#include <string>
#include <vector>

namespace dlab::cli {

// Entry point behind the distortion-lab binary; exposed so tests can drive
// the CLI in-process. Returns the process exit code: 0 success, 2 bad
// arguments / IO / precondition, 3 violated bound or failed verification.
int run(const std::vector<std::string>& args);

}  // namespace dlab::cli
