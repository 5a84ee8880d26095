#pragma once

#include <string>
#include <vector>

namespace pqn::cli {

/// Entry point behind the binary; exits 0 on success, 1 on check failure,
/// 2 on input errors. Human-readable progress goes to stderr, reports and
/// generated files to --out or stdout.
int run(const std::vector<std::string>& args);

}  // namespace pqn::cli
