#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isf::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailed = 1,  // a checked identity or inequality did not hold
  kBadInput = 2,        // usage error or invalid input file
};

// Runs one command line (without the program name). A JSON report
//   {"command": ..., "ok": ..., "payload": ..., "diagnostics": [...]}
// is always written to `out`; usage problems are also echoed to `err`.
// File arguments equal to "-" are read from `in`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace isf::cli
