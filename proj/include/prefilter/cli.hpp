#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prefilter {

// Parse and run one command line; `args` excludes the program name. The
// streams are injected so tests can drive stdin and capture stdout/stderr
// in-process. Returns the process exit code: 0 on success, 1 on a usage
// error, 2 on a data or I/O error.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace prefilter
