// Command-line front end. run_cli parses arguments (without the program
// name) and returns the process exit code.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace center_order {

enum ExitCode {
  kExitDecided = 0,
  kExitUndetermined = 2,
  kExitUsage = 64,
  kExitDataError = 65,
  kExitSoundness = 70,
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1..30", "1..29,650", "5,15,A"
std::vector<int> parse_center_range(const std::string& text);

}  // namespace center_order
