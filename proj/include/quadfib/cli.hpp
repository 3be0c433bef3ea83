#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadfib {

// Exit codes of the quadfib command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// args excludes the program name. Diagnostics go to err as a single line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

}  // namespace quadfib
