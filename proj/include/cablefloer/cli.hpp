#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cf::cli {

/* Full command-line driver; args exclude the program name.  Returns 0 on
 * success, 1 on input errors, 2 when a verification or oracle check fails. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cf::cli
