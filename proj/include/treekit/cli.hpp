#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treekit::cli {

// Full command-line driver, callable in-process. `args` excludes the program
// name. All data output goes to `out`, diagnostics to `err`. Returns the
// process exit code: 0 success, 1 usage/configuration error, 2 data error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace treekit::cli
