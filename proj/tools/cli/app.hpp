#pragma once

#include <iosfwd>

namespace secgraph::cli {

/// Parses argv, runs the selected command and writes its output to `out`
/// (or to --out). Returns the process exit code.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace secgraph::cli
