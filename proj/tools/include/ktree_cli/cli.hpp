#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktree::cli {

/// Exit codes: 0 clean, 1 violation or failed cross-check, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ktree::cli
