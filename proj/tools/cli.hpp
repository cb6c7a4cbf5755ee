#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superrr::cli {

enum ExitCode : int { ok = 0, validation_error = 1, identity_failure = 2 };

// Runs one subcommand: vdim, chi, grr-check, table or identities.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superrr::cli
