#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpi {

/* Entry point behind the command-line tool, separated so tests can drive it
 * in-process. args excludes the program name. Returns the process exit code:
 * 0 on success (every checked theorem matches), 1 when a theorem mismatches,
 * 2 on usage errors such as unknown ids or malformed flags. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpi
