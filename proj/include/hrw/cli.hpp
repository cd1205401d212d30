#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrw {

// Runs one command. Args exclude the program name. Exit codes:
//   0 pass / valid / Confirmed
//   1 fail / Refuted (witness lines printed in a stable order)
//   2 input or parse error
//   3 resource budget exceeded
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrw
