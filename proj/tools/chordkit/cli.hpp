#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordkit::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kCapacity = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`; graph input is read from `in` when no file or
/// family is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chordkit::cli
