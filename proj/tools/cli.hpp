#pragma once

#include <iosfwd>
#include <string>

#include "toricd/arith.hpp"
#include "toricd/lattice.hpp"

namespace toricd::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kUncertified = 3,
  kLimitExceeded = 4,
};

// JSON {"columns": [[...], ...]} or {"rows": ...}, otherwise whitespace rows
// separated by newlines or ';'.
IntMatrix parse_matrix(const std::string& text);
IntMatrix load_matrix(const std::string& path);
// "1/2,0", "1/2 0" or "(1/2,0)".
RatVector parse_vector(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricd::cli
