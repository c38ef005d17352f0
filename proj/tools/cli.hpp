#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinlab {

// exit codes: 0 all checks pass, 1 checks ran and failed, 2 usage or domain error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinlab
