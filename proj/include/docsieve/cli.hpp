#pragma once

#include <iosfwd>

namespace docsieve {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitManifest = 3,
};

// Entry point of the `docsieve` tool: data and tables go to `out`, logs and
// errors to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace docsieve
