#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singcol {

// Runs one CLI invocation. Results go to `out` as JSON lines (or rendered
// text for `diagram`), diagnostics to `err`. Returns the process exit code:
// 0 success, 1 domain error, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace singcol
