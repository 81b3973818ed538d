#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lasg::cli {

enum class ExitStatus : int {
  Success = 0,         // property holds / nothing requested failed
  PropertyFails = 1,   // a requested check produced a counterexample
  UsageError = 2,
  InputError = 3,
  LimitExceeded = 4,
};

// args excludes the program name. Relative paths are resolved against the
// process working directory.
ExitStatus run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err);

}  // namespace lasg::cli
