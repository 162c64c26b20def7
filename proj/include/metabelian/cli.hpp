#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metab {

/// Runs one command line (without the program name).  Returns the process
/// exit status: 0 on success / true / all-pass, 1 on false or a failed
/// verification, 2 on usage, parse or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metab
