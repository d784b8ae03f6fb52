#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jordanrep {

/// Exit codes: 0 success, 1 input/usage error, 2 a structural claim failed.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jordanrep
