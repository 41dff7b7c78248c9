#pragma once

namespace cover::cli {

// Full CLI entry point. Returns the process exit code: 0 on success, 2 on
// parameter errors, 1 on runtime failures.
int run(int argc, const char* const* argv);

}  // namespace cover::cli
