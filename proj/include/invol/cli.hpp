#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invol::cli {

/// Runs the command line tool. args excludes the program name. Data goes to
/// out, diagnostics to err. Returns 0 when every requested verification
/// passed, 1 when some verdict or cross-check failed, 2 on usage or domain
/// errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace invol::cli
