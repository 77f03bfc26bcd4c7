#pragma once

#include <string>
#include <vector>

namespace k3nu {

// Exit codes: 0 success, 2 configuration/usage error, 3 numerical failure
// (non-finite intermediate). Subcommands: validate, correlators, scan-phi,
// scan-vcc, scan-coupling, scan-tau, scan-energy, scan-2d.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args without argv[0]

}  // namespace k3nu
