#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpm {

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 invalid
// shape, 3 verification failure. Diagnostics go to err, payload to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpm
