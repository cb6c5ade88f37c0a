#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suspla {

inline constexpr const char* kVersion = "suspla 0.1.0";

/* Worker cap honored by the parallel code paths: the SUSPLA_THREADS
 * environment variable when set (it must parse as a positive integer,
 * SchemaError otherwise), the hardware concurrency when not. */
int worker_count();

/* The driver behind the suspla executable: parses a command line, loads the
 * referenced documents, dispatches to the library, and writes the report to
 * out (diagnostics and the version log line go to err).  Returns the process
 * exit code: 0 pass, 1 verified failure, 2 indeterminate or overflow, 3
 * malformed input or usage error.  Identical invocations produce identical
 * bytes. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace suspla
