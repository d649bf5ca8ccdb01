#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ivhs/polytope.hpp"
#include "ivhs/toric.hpp"

namespace ivhs::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2, kHypothesis = 3 };

/// Runs one invocation.  args[0] is the program name.  Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"name": ..., "rays": [[...], ...], "max_cones": [[...], ...]}
Fan parse_fan_document(const std::string& text);
/// {"inequalities": [{"a": [...], "c": k}, ...]} meaning <a, x> + c >= 0.
LatticePolytope parse_polytope_document(const std::string& text);

/// "1,0,-2" -> {1, 0, -2}.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace ivhs::cli
