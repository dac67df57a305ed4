#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsi {

// Runs one command-line invocation in-process (no argv[0]). Rendered output
// goes to `out` (or to the file named by --out), diagnostics to `err`.
// Exit code: 0 when every check passes, 1 on verification failure, 2 on
// usage or configuration errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsi
